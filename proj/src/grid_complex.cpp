#include "lefforge/grid_complex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

namespace lefforge {

GridShape GridShape::make(int t, int m, int n) {
    if (t < 2) throw ParameterError("shape: t must be at least 2");
    if (m < 1 || n < 1) throw ParameterError("shape: m and n must be positive");
    if (t > std::min(m, n)) throw ParameterError("shape: t exceeds min(m,n)");
    if (t >= std::max(m, n)) throw ParameterError("shape: t must be smaller than max(m,n)");
    if (m * n > static_cast<int>(VertexSet::kCapacity)) throw ParameterError("shape: grids above 256 points are not supported");
    return GridShape(t, m, n);
}

std::size_t GridShape::index(int row, int col) const {
    if (row < 1 || row > m_ || col < 1 || col > n_) throw ParameterError("grid point outside the grid");
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
}

GridPoint GridShape::point(std::size_t v) const {
    if (v >= vertex_count()) throw ParameterError("vertex index outside the grid");
    const int iv = static_cast<int>(v);
    return {iv / n_ + 1, iv % n_ + 1};
}

std::string GridShape::label() const {
    return "(" + std::to_string(t_) + "," + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

std::string GridShape::format(const VertexSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t v) {
        const auto p = point(v);
        if (!first) out += ",";
        first = false;
        out += "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
    });
    return out + "}";
}

MonomialIdeal initial_ideal_generators(const GridShape& shape) {
    const int t = shape.t();
    MonomialIdeal ideal{shape, {}};
    std::vector<int> rows(static_cast<std::size_t>(t)), cols(static_cast<std::size_t>(t));
    auto next = [](std::vector<int>& sel, int limit) {
        const int k = static_cast<int>(sel.size());
        int pos = k - 1;
        while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == limit - k + pos + 1) --pos;
        if (pos < 0) return false;
        ++sel[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) sel[static_cast<std::size_t>(i)] = sel[static_cast<std::size_t>(i - 1)] + 1;
        return true;
    };
    for (int i = 0; i < t; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
    do {
        for (int i = 0; i < t; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
        do {
            VertexSet g;
            for (std::size_t k = 0; k < rows.size(); ++k) g.insert(shape.index(rows[k], cols[k]));
            ideal.generators.push_back(g);
        } while (next(cols, shape.n()));
    } while (next(rows, shape.m()));
    std::sort(ideal.generators.begin(), ideal.generators.end());
    return ideal;
}

int longest_increasing_chain(const GridShape& shape, const VertexSet& s) {
    // tails[k] = smallest last column of a chain of length k+1 in rows seen so far.
    std::vector<int> tails;
    int current_row = 0;
    std::vector<std::pair<std::size_t, int>> pending;
    auto flush = [&] {
        for (auto [pos, col] : pending) {
            if (pos == tails.size()) tails.push_back(col);
            else tails[pos] = std::min(tails[pos], col);
        }
        pending.clear();
    };
    s.for_each([&](std::size_t v) {
        const auto p = shape.point(v);
        if (p.row != current_row) {
            flush();
            current_row = p.row;
        }
        const auto pos = static_cast<std::size_t>(std::lower_bound(tails.begin(), tails.end(), p.col) - tails.begin());
        pending.emplace_back(pos, p.col);
    });
    flush();
    return static_cast<int>(tails.size());
}

bool is_face(const GridShape& shape, const VertexSet& s) {
    if (static_cast<int>(s.size()) < shape.t()) return true;
    return longest_increasing_chain(shape, s) < shape.t();
}

namespace {

struct PathSearch {
    const GridShape& shape;
    std::uint64_t budget;
    std::vector<PathFamily> out;
    VertexSet occupied;
    std::vector<std::vector<GridPoint>> paths;
    std::vector<std::string> steps;

    void run_path(int i) {
        if (i == shape.t()) {
            if (out.size() >= budget) {
                const BigInt need = facet_count_lgv(shape);
                const std::uint64_t req =
                    need > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                     : static_cast<std::uint64_t>(need);
                throw BudgetError("facet enumeration: " + need.str() + " facets exceed the budget of " +
                                      std::to_string(budget),
                                  req);
            }
            out.push_back({paths, steps, occupied});
            return;
        }
        const GridPoint start{i, shape.n()};
        const auto v = shape.index(start);
        if (occupied.contains(v)) return;
        occupied.insert(v);
        paths.push_back({start});
        steps.emplace_back();
        walk(i, start);
        steps.pop_back();
        paths.pop_back();
        occupied.erase(v);
    }

    void walk(int i, GridPoint at) {
        if (at.row == shape.m() && at.col == i) {
            run_path(i + 1);
            return;
        }
        const GridPoint moves[2] = {{at.row + 1, at.col}, {at.row, at.col - 1}};
        const char names[2] = {'D', 'L'};
        for (int k = 0; k < 2; ++k) {
            const auto nxt = moves[k];
            if (nxt.row > shape.m() || nxt.col < i) continue;
            const auto v = shape.index(nxt);
            if (occupied.contains(v)) continue;
            occupied.insert(v);
            paths.back().push_back(nxt);
            steps.back().push_back(names[k]);
            walk(i, nxt);
            steps.back().pop_back();
            paths.back().pop_back();
            occupied.erase(v);
        }
    }
};

}  // namespace

std::vector<PathFamily> enumerate_path_families(const GridShape& shape, std::uint64_t budget) {
    PathSearch search{shape, budget, {}, {}, {}, {}};
    search.run_path(1);
    return std::move(search.out);
}

std::vector<VertexSet> enumerate_facets(const GridShape& shape, std::uint64_t budget) {
    const auto families = enumerate_path_families(shape, budget);
    std::vector<VertexSet> out;
    out.reserve(families.size());
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& fam : families)
        if (seen.insert(fam.vertices).second) out.push_back(fam.vertices);
    return out;
}

SimplicialComplex delta_complex(const GridShape& shape, std::uint64_t budget) {
    return SimplicialComplex(shape.vertex_count(), enumerate_facets(shape, budget));
}

BigInt facet_count_lgv(const GridShape& shape) {
    const int k = shape.t() - 1;
    std::vector<std::vector<BigInt>> mat(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            mat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                binomial((shape.m() - i) + (shape.n() - j), shape.m() - i);
    return determinant(std::move(mat));
}

FVector delta_f_vector(const GridShape& shape) {
    // Delta is symmetric under transposition, so sweep over the longer side.
    const int rows = std::max(shape.m(), shape.n());
    const int cols = std::min(shape.m(), shape.n());
    const int t = shape.t();
    if (cols > 20) throw BudgetError("delta_f_vector: rows wider than 20 are not supported", std::uint64_t{1} << 20);
    const int inf = cols + 1;

    using Profile = std::vector<std::uint8_t>;
    using Poly = std::vector<BigInt>;  // by face size
    std::map<Profile, Poly> states;
    states[Profile(static_cast<std::size_t>(t - 1), static_cast<std::uint8_t>(inf))] = Poly{1};

    const std::uint32_t subsets = 1u << cols;
    for (int r = 0; r < rows; ++r) {
        std::map<Profile, Poly> next;
        for (const auto& [profile, poly] : states) {
            for (std::uint32_t mask = 0; mask < subsets; ++mask) {
                Profile updated = profile;
                bool ok = true;
                for (int c = 1; c <= cols && ok; ++c) {
                    if (!((mask >> (c - 1)) & 1)) continue;
                    std::size_t k = 0;
                    while (k < profile.size() && profile[k] < c) ++k;
                    if (k >= profile.size()) ok = false;
                    else updated[k] = std::min<std::uint8_t>(updated[k], static_cast<std::uint8_t>(c));
                }
                if (!ok) continue;
                const auto add = static_cast<std::size_t>(std::popcount(mask));
                auto& dst = next[updated];
                if (dst.size() < poly.size() + add) dst.resize(poly.size() + add);
                for (std::size_t s = 0; s < poly.size(); ++s) dst[s + add] += poly[s];
            }
        }
        states = std::move(next);
    }
    FVector f;
    for (const auto& [profile, poly] : states) {
        if (f.counts.size() < poly.size()) f.counts.resize(poly.size());
        for (std::size_t s = 0; s < poly.size(); ++s) f.counts[s] += poly[s];
    }
    while (!f.counts.empty() && f.counts.back() == 0) f.counts.pop_back();
    return f;
}

std::vector<BigInt> delta_h_vector(const GridShape& shape) {
    auto h = h_vector(delta_f_vector(shape), shape.krull_dimension());
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

VertexSet vertex_region(const GridShape& shape, int a) {
    const int t = shape.t(), m = shape.m(), n = shape.n();
    if (a < 0 || a > t - 1) throw ParameterError("vertex_region: a must lie in [0, t-1]");
    VertexSet v;
    for (int i = 1; i <= a; ++i) v.insert(shape.index(i, i));
    for (int i = 0; i <= t - a - 2; ++i) v.insert(shape.index(m - i, n - i));
    for (int i = a + 1; i <= m + a + 1 - t; ++i)
        for (int j = a + 1; j <= n + a + 1 - t; ++j) v.insert(shape.index(i, j));
    return v;
}

namespace {

struct MaximalFaceSearch {
    const GridShape& shape;
    std::vector<std::size_t> order;
    std::vector<VertexSet> out;

    // Can v still be blocked, i.e. does some t-chain through v fit in pool?
    bool blockable(std::size_t v, const VertexSet& pool) const {
        VertexSet with = pool;
        with.insert(v);
        const auto p = shape.point(v);
        VertexSet below, above;
        with.for_each([&](std::size_t w) {
            const auto q = shape.point(w);
            if (q.row < p.row && q.col < p.col) below.insert(w);
            if (q.row > p.row && q.col > p.col) above.insert(w);
        });
        return longest_increasing_chain(shape, below) + 1 + longest_increasing_chain(shape, above) >= shape.t();
    }

    void search(std::size_t pos, VertexSet chosen, VertexSet undecided) {
        if (pos == order.size()) {
            for (auto v : order)
                if (!chosen.contains(v)) {
                    VertexSet grown = chosen;
                    grown.insert(v);
                    if (is_face(shape, grown)) return;
                }
            out.push_back(chosen);
            return;
        }
        const auto v = order[pos];
        undecided.erase(v);
        VertexSet with = chosen;
        with.insert(v);
        if (is_face(shape, with)) search(pos + 1, with, undecided);
        if (blockable(v, chosen | undecided)) search(pos + 1, chosen, undecided);
    }
};

}  // namespace

std::vector<VertexSet> maximal_faces_within(const GridShape& shape, const VertexSet& u) {
    MaximalFaceSearch s{shape, u.members(), {}};
    s.search(0, VertexSet{}, u);
    return maximal_sets(std::move(s.out));
}

SimplicialComplex omega(const GridShape& shape, int a, std::uint64_t budget) {
    const auto region = vertex_region(shape, a);
    std::vector<VertexSet> parts;
    try {
        for (const auto& f : enumerate_facets(shape, budget)) parts.push_back(f & region);
    } catch (const BudgetError&) {
        parts = maximal_faces_within(shape, region);
    }
    return SimplicialComplex(shape.vertex_count(), std::move(parts));
}

std::vector<VertexSet> restricted_faces(const GridShape& shape, const VertexSet& u, int k) {
    if (k < -1) return {};
    if (k == -1) return {VertexSet{}};
    const auto size = static_cast<std::size_t>(k + 1);
    if (static_cast<int>(size) < shape.t()) return subsets_of_size(u, size);
    return subsets_of_size(u, size, [&](const VertexSet& s) { return is_face(shape, s); });
}

}  // namespace lefforge
