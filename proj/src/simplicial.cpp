#include "lefforge/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lefforge {

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    if (sets.size() < 2) return sets;
    const std::size_t first = sets.front().size();
    if (std::all_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s.size() == first; })) return sets;

    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sets[a].size() > sets[b].size(); });
    std::vector<VertexSet> kept;
    for (auto idx : order) {
        const auto& s = sets[idx];
        bool covered = false;
        for (const auto& k : kept) {
            if (k.size() > s.size() && s.is_subset_of(k)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

SimplicialComplex::SimplicialComplex(std::size_t ambient_vertex_count, std::vector<VertexSet> facets)
    : ambient_(ambient_vertex_count) {
    if (ambient_ > VertexSet::kCapacity) throw ParameterError("SimplicialComplex: too many vertices");
    for (const auto& f : facets)
        if (f.bound() > ambient_) throw ParameterError("SimplicialComplex: facet vertex outside ambient range");
    facets_ = maximal_sets(std::move(facets));
    if (facets_.empty()) facets_.push_back(VertexSet{});
    for (const auto& f : facets_) dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
}

bool SimplicialComplex::contains_face(const VertexSet& f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& g) { return f.is_subset_of(g); });
}

VertexSet SimplicialComplex::vertices() const {
    VertexSet u;
    for (const auto& f : facets_) u = u | f;
    return u;
}

SimplicialComplex restriction(const SimplicialComplex& c, const VertexSet& u) {
    std::vector<VertexSet> parts;
    parts.reserve(c.facets().size());
    for (const auto& f : c.facets()) parts.push_back(f & u);
    return SimplicialComplex(c.ambient_vertex_count(), std::move(parts));
}

SimplicialComplex link(const SimplicialComplex& c, const VertexSet& f) {
    std::vector<VertexSet> parts;
    for (const auto& g : c.facets())
        if (f.is_subset_of(g)) parts.push_back(g - f);
    if (parts.empty()) throw ParameterError("link: the given set is not a face");
    return SimplicialComplex(c.ambient_vertex_count(), std::move(parts));
}

std::vector<VertexSet> subsets_of_size(const VertexSet& pool, std::size_t k,
                                       const std::function<bool(const VertexSet&)>& keep) {
    const auto items = pool.members();
    std::vector<VertexSet> out;
    if (k > items.size()) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        VertexSet s;
        for (auto i : idx) s.insert(items[i]);
        if (!keep || keep(s)) out.push_back(s);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == items.size() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
    if (k < -1) throw ParameterError("skeleton: dimension must be at least -1");
    const auto size = static_cast<std::size_t>(k + 1);
    std::vector<VertexSet> parts;
    for (const auto& f : c.facets()) {
        if (f.size() <= size) {
            parts.push_back(f);
        } else {
            auto sub = subsets_of_size(f, size);
            parts.insert(parts.end(), sub.begin(), sub.end());
        }
    }
    return SimplicialComplex(c.ambient_vertex_count(), std::move(parts));
}

std::vector<VertexSet> faces_of_dim(const SimplicialComplex& c, int k, std::uint64_t budget) {
    if (k < -1) return {};
    if (k == -1) return {VertexSet{}};
    const auto size = static_cast<std::size_t>(k + 1);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::uint64_t visited = 0;
    for (const auto& f : c.facets()) {
        if (f.size() < size) continue;
        const auto items = f.members();
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (++visited > budget)
                throw BudgetError("faces_of_dim: more than " + std::to_string(budget) + " subsets visited", visited);
            VertexSet s;
            for (auto i : idx) s.insert(items[i]);
            seen.insert(s);
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == items.size() - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

FVector f_vector(const SimplicialComplex& c, std::uint64_t budget) {
    FVector f;
    for (int k = -1; k <= c.dimension(); ++k) f.counts.emplace_back(faces_of_dim(c, k, budget).size());
    return f;
}

std::vector<BigInt> h_vector(const FVector& f, int d) {
    std::vector<BigInt> h(static_cast<std::size_t>(std::max(d, -1) + 1));
    for (int k = 0; k <= d; ++k) {
        BigInt acc = 0;
        for (int i = 0; i <= k; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (ui >= f.counts.size()) break;
            BigInt term = binomial(d - i, k - i) * f.counts[ui];
            if ((k - i) % 2) acc -= term;
            else acc += term;
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

SparseMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> row_of;
    row_of.reserve(lower.size());
    for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);
    std::vector<SparseEntry> entries;
    for (std::size_t col = 0; col < upper.size(); ++col) {
        std::int64_t sign = 1;
        upper[col].for_each([&](std::size_t v) {
            VertexSet face = upper[col];
            face.erase(v);
            auto it = row_of.find(face);
            if (it == row_of.end()) throw ParameterError("boundary_matrix: face list is not closed under taking faces");
            entries.push_back({it->second, col, sign});
            sign = -sign;
        });
    }
    return SparseMatrix(lower.size(), upper.size(), std::move(entries));
}

SparseMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    return boundary_matrix(faces_of_dim(c, k - 1), faces_of_dim(c, k));
}

std::size_t reduced_homology_dim(const FaceLister& faces, int i, const FieldSpec& field) {
    if (i < -1) return 0;
    const auto here = faces(i);
    if (here.empty()) return 0;
    std::size_t rank_out = 0;
    if (i >= 0) rank_out = rank(boundary_matrix(faces(i - 1), here), field);
    std::size_t rank_in = 0;
    const auto above = faces(i + 1);
    if (!above.empty()) rank_in = rank(boundary_matrix(here, above), field);
    return here.size() - rank_out - rank_in;
}

std::size_t reduced_homology_dim(const SimplicialComplex& c, int i, const FieldSpec& field) {
    return reduced_homology_dim([&](int k) { return faces_of_dim(c, k); }, i, field);
}

}  // namespace lefforge
