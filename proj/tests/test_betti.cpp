#include <doctest.h>

#include <numeric>

#include "lefforge/betti.hpp"
#include "support/oracles.hpp"

using namespace lefforge;

namespace {

// H~_0 of Delta(2,m,n)_U from connected components of its 1-skeleton: two
// points span an edge unless they form a strictly increasing chain.
std::size_t h0_by_components(const GridShape& s, const VertexSet& u) {
    const auto pts = u.members();
    if (pts.empty()) return 0;
    std::vector<std::size_t> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const auto p = s.point(pts[a]), q = s.point(pts[b]);
            const bool chain = (p.row < q.row && p.col < q.col) || (q.row < p.row && q.col < p.col);
            if (!chain) parent[find(a)] = find(b);
        }
    std::size_t comps = 0;
    for (std::size_t a = 0; a < pts.size(); ++a) comps += find(a) == a;
    return comps - 1;
}

}  // namespace

TEST_CASE("Betti corner values for t = 2") {
    const auto q = FieldSpec::rationals();
    CHECK(hochster_betti(GridShape::make(2, 3, 3), 4, 5, q).value == 2);
    CHECK(hochster_betti(GridShape::make(2, 2, 3), 2, 3, q).value == 2);
    CHECK(hochster_betti(GridShape::make(2, 2, 4), 3, 4, q).value == 3);
    CHECK(hochster_betti(GridShape::make(2, 2, 5), 4, 5, q).value == 4);
    CHECK(hochster_betti(GridShape::make(2, 3, 4), 6, 7, FieldSpec::prime_field()).value == 2);
}

TEST_CASE("Betti witnesses and kinds") {
    const auto s = GridShape::make(2, 3, 3);
    const auto r = hochster_betti(s, 4, 5, FieldSpec::prime_field());
    CHECK(r.kind == BettiKind::exact);
    CHECK(r.pruned);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0].subset == vertex_region(s, 0));
    CHECK(r.witnesses[1].subset == vertex_region(s, 1));
    std::size_t sum = 0;
    for (const auto& w : r.witnesses) sum += w.homology_dim;
    CHECK(sum == r.value);
    CHECK_FALSE(hochster_betti(s, 3, 5, FieldSpec::prime_field()).pruned);
    CHECK_THROWS_AS(hochster_betti(GridShape::make(2, 4, 4), 9, 10, FieldSpec::prime_field(), 100), BudgetError);
    try {
        hochster_betti(GridShape::make(2, 4, 4), 9, 10, FieldSpec::prime_field(), 100);
    } catch (const BudgetError& e) {
        // Pruning drops the two corners: C(14,10) rather than C(16,10).
        CHECK(e.required() == 1001);
    }
    CHECK_THROWS_AS(hochster_betti(s, 5, 4, FieldSpec::prime_field()), ParameterError);
}

TEST_CASE("Betti numbers do not depend on thread count or prime") {
    const auto s = GridShape::make(3, 4, 4);
    const auto one = hochster_betti(s, 4, 6, FieldSpec::prime_field(), kDefaultBettiBudget, 1);
    const auto four = hochster_betti(s, 4, 6, FieldSpec::prime_field(kSecondaryPrime), kDefaultBettiBudget, 4);
    CHECK(one.value == 3);
    CHECK(one.value == four.value);
    CHECK(one.subsets_examined == four.subsets_examined);
    REQUIRE(one.witnesses.size() == four.witnesses.size());
    for (std::size_t k = 0; k < one.witnesses.size(); ++k) CHECK(one.witnesses[k].subset == four.witnesses[k].subset);
}

TEST_CASE("Omega lower bound") {
    const auto q = FieldSpec::rationals();
    for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 6}, {2, 5}, {5, 5}}) {
        const auto r = omega_lower_bound(GridShape::make(2, m, n), q);
        CHECK(r.kind == BettiKind::lower_bound);
        CHECK(r.value == 2);
        CHECK(r.witnesses.size() == 2);
    }
    const auto s = GridShape::make(3, 4, 5);
    const auto r = omega_lower_bound(s, q);
    CHECK(r.value == 3);
    for (int a = 0; a < 3; ++a) {
        CHECK(r.witnesses[static_cast<std::size_t>(a)].subset == vertex_region(s, a));
        CHECK(r.witnesses[static_cast<std::size_t>(a)].homology_dim == 1);
    }
    CHECK(restricted_homology_dim(GridShape::make(2, 3, 3), vertex_region(GridShape::make(2, 3, 3), 0), 0, q) == 1);
}

TEST_CASE("property: graded Betti numbers reproduce the Hilbert series numerator") {
    // sum_i (-1)^i beta_{i,j} = [x^j] h(x) (1-x)^(mn-d) for the quotient ring.
    for (auto [t, m, n] : {std::array{2, 2, 3}, {2, 2, 4}, {2, 3, 3}, {3, 3, 4}}) {
        const auto s = GridShape::make(t, m, n);
        const auto h = delta_h_vector(s);
        const int codim = static_cast<int>(s.vertex_count()) - s.krull_dimension();
        std::vector<BigInt> k(h.size() + static_cast<std::size_t>(codim), 0);
        for (std::size_t a = 0; a < h.size(); ++a)
            for (int b = 0; b <= codim; ++b) k[a + static_cast<std::size_t>(b)] += h[a] * binomial(codim, b) * (b % 2 ? -1 : 1);
        for (int j = 0; j < static_cast<int>(k.size()); ++j) {
            BigInt alt = 0;
            for (int i = 0; i <= j; ++i) {
                const auto b = hochster_betti(s, i, j, FieldSpec::prime_field()).value;
                alt += (i % 2 ? -1 : 1) * BigInt(b);
            }
            CAPTURE(j);
            CHECK(alt == k[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("property: Betti corner dominates the Omega bound, which is at least t") {
    for (auto [t, m, n] : {std::array{2, 3, 3}, {2, 3, 4}, {2, 2, 6}, {3, 4, 4}, {3, 3, 5}}) {
        const auto s = GridShape::make(t, m, n);
        const auto exact = hochster_betti(s, s.height(), s.height() + t - 1, FieldSpec::prime_field());
        const auto bound = omega_lower_bound(s, FieldSpec::prime_field());
        CAPTURE(s.label());
        CHECK(exact.value >= bound.value);
        if (!s.t_is_min()) CHECK(bound.value >= static_cast<std::uint64_t>(t));
    }
}

TEST_CASE("classification of H~_0 subcomplexes") {
    const auto q = FieldSpec::rationals();
    const auto s33 = GridShape::make(2, 3, 3);
    const auto c33 = classify_h0_subcomplexes(3, 3, q);
    REQUIRE(c33.size() == 2);
    CHECK(c33[0].subset == vertex_region(s33, 0));
    CHECK(c33[1].subset == vertex_region(s33, 1));

    const auto s24 = GridShape::make(2, 2, 4);
    const auto c24 = classify_h0_subcomplexes(2, 4, q);
    REQUIRE(c24.size() == 3);
    for (int b = 1; b <= 3; ++b) {
        // {(1,1..b), (2,b+1..4)}
        VertexSet expected;
        for (int c = 1; c <= b; ++c) expected.insert(s24.index(1, c));
        for (int c = b + 1; c <= 4; ++c) expected.insert(s24.index(2, c));
        CHECK(std::any_of(c24.begin(), c24.end(), [&](const BettiWitness& w) { return w.subset == expected; }));
    }
    for (const auto& w : c24) CHECK(w.homology_dim == 1);
}

TEST_CASE("property: classified subsets miss the corners and a point in every row and column") {
    for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {2, 4}, {2, 5}}) {
        const auto s = GridShape::make(2, m, n);
        const auto found = classify_h0_subcomplexes(m, n, FieldSpec::prime_field());
        for (const auto& w : found) {
            CHECK_FALSE(w.subset.contains(s.index(1, n)));
            CHECK_FALSE(w.subset.contains(s.index(m, 1)));
            for (int r = 1; r <= m; ++r) {
                bool missing = false;
                for (int c = 1; c <= n; ++c) missing |= !w.subset.contains(s.index(r, c));
                CHECK(missing);
            }
            for (int c = 1; c <= n; ++c) {
                bool missing = false;
                for (int r = 1; r <= m; ++r) missing |= !w.subset.contains(s.index(r, c));
                CHECK(missing);
            }
            CHECK(w.homology_dim == h0_by_components(s, w.subset));
        }
        // Exhaustive cross-check against the component count.
        std::size_t expected = 0;
        for (const auto& u : subsets_of_size(VertexSet::prefix(s.vertex_count()),
                                             static_cast<std::size_t>((m - 1) * (n - 1) + 1)))
            expected += h0_by_components(s, u) >= 1;
        CHECK(found.size() == expected);
    }
}
