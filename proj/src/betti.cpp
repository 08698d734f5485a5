#include "lefforge/betti.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace lefforge {

std::string to_string(BettiKind k) { return k == BettiKind::exact ? "exact" : "lower_bound"; }

std::size_t restricted_homology_dim(const GridShape& shape, const VertexSet& u, int i, const FieldSpec& field) {
    if (i < -1) return 0;
    // A face restricts to a full simplex, which is acyclic unless empty.
    if (is_face(shape, u)) return (u.empty() && i == -1) ? 1 : 0;
    return reduced_homology_dim([&](int k) { return restricted_faces(shape, u, k); }, i, field);
}

namespace {

std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k) {
    const BigInt b = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    if (b > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(b);
}

// Lexicographic unranking of k-combinations of {0..n-1}.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> idx;
    idx.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t v = next;; ++v) {
            const std::uint64_t block = small_binomial(n - v - 1, k - slot - 1);
            if (rank < block) {
                idx.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return idx;
}

bool advance_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    return true;
}

struct ScanResult {
    std::uint64_t total = 0;
    std::vector<BettiWitness> witnesses;
};

// Sums dim H~_q(Delta_U) over all size-k subsets U of pool.
ScanResult scan_subsets(const GridShape& shape, const VertexSet& pool, std::size_t k, int q, const FieldSpec& field,
                        std::uint64_t count, unsigned threads) {
    const auto items = pool.members();
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
    std::vector<ScanResult> parts(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t begin = count * w / workers, end = count * (w + 1) / workers;
        if (begin >= end) return;
        auto idx = unrank_combination(items.size(), k, begin);
        for (std::uint64_t r = begin; r < end; ++r) {
            VertexSet u;
            for (auto i : idx) u.insert(items[i]);
            const auto d = restricted_homology_dim(shape, u, q, field);
            if (d > 0) {
                parts[w].total += d;
                parts[w].witnesses.push_back({u, d});
            }
            advance_combination(idx, items.size());
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool_threads;
        for (unsigned w = 0; w < workers; ++w) pool_threads.emplace_back(work, w);
        for (auto& th : pool_threads) th.join();
    }
    ScanResult out;
    for (auto& p : parts) {
        out.total += p.total;
        out.witnesses.insert(out.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    // Lexicographic combination order of a sorted pool is VertexSet order already.
    return out;
}

}  // namespace

BettiResult hochster_betti(const GridShape& shape, int i, int j, const FieldSpec& field, std::uint64_t budget,
                           unsigned threads) {
    if (i < 0 || j < i) throw ParameterError("hochster_betti: need 0 <= i <= j");
    BettiResult res;
    res.i = i;
    res.j = j;
    res.kind = BettiKind::exact;
    if (static_cast<std::size_t>(j) > shape.vertex_count()) return res;

    VertexSet pool = VertexSet::prefix(shape.vertex_count());
    if (shape.t() == 2 && i == shape.height() && j == shape.height() + 1) {
        // Both corners lie on every facet, so a subset holding one of them restricts to a cone.
        pool.erase(shape.index(1, shape.n()));
        pool.erase(shape.index(shape.m(), 1));
        res.pruned = true;
    }
    const std::uint64_t count = small_binomial(pool.size(), static_cast<std::uint64_t>(j));
    if (count > budget)
        throw BudgetError("hochster_betti: " + binomial(static_cast<std::int64_t>(pool.size()), j).str() +
                              " subsets exceed the budget of " + std::to_string(budget),
                          count);
    auto scan = scan_subsets(shape, pool, static_cast<std::size_t>(j), j - i - 1, field, count, threads);
    res.value = scan.total;
    res.witnesses = std::move(scan.witnesses);
    res.subsets_examined = count;
    return res;
}

BettiResult omega_lower_bound(const GridShape& shape, const FieldSpec& field) {
    BettiResult res;
    res.i = shape.height();
    res.j = shape.height() + shape.t() - 1;
    res.kind = BettiKind::lower_bound;
    for (int a = 0; a < shape.t(); ++a) {
        const auto region = vertex_region(shape, a);
        const auto d = restricted_homology_dim(shape, region, shape.t() - 2, field);
        res.value += d;
        res.witnesses.push_back({region, d});
        ++res.subsets_examined;
    }
    return res;
}

std::vector<BettiWitness> classify_h0_subcomplexes(int m, int n, const FieldSpec& field, std::uint64_t budget,
                                                   unsigned threads) {
    const auto shape = GridShape::make(2, m, n);
    const auto size = static_cast<std::uint64_t>((m - 1) * (n - 1) + 1);
    const std::uint64_t count = small_binomial(shape.vertex_count(), size);
    if (count > budget)
        throw BudgetError("classify_h0_subcomplexes: " + std::to_string(count) + " subsets exceed the budget of " +
                              std::to_string(budget),
                          count);
    return scan_subsets(shape, VertexSet::prefix(shape.vertex_count()), size, 0, field, count, threads).witnesses;
}

}  // namespace lefforge
