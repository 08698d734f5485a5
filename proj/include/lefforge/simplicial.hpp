#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lefforge/exact_linalg.hpp"
#include "lefforge/vertex_set.hpp"

namespace lefforge {

inline constexpr std::uint64_t kDefaultFaceBudget = 10'000'000;

/// Finite simplicial complex given by its facets. The facet list is kept as a
/// sorted antichain; an empty facet list is normalized to the complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(0, {}) {}
    SimplicialComplex(std::size_t ambient_vertex_count, std::vector<VertexSet> facets);

    std::size_t ambient_vertex_count() const noexcept { return ambient_; }
    const std::vector<VertexSet>& facets() const noexcept { return facets_; }

    /// -1 for {∅}.
    int dimension() const noexcept { return dim_; }
    bool contains_face(const VertexSet& f) const;
    /// Union of all facets.
    VertexSet vertices() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t ambient_;
    std::vector<VertexSet> facets_;
    int dim_ = -1;
};

/// Keeps only inclusion-maximal sets, sorted, deduplicated.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);

SimplicialComplex restriction(const SimplicialComplex& c, const VertexSet& u);
/// Throws ParameterError if f is not a face.
SimplicialComplex link(const SimplicialComplex& c, const VertexSet& f);
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// All faces of dimension k in ascending order; k = -1 gives [∅].
/// Throws BudgetError once more than `budget` candidate subsets are visited.
std::vector<VertexSet> faces_of_dim(const SimplicialComplex& c, int k, std::uint64_t budget = kDefaultFaceBudget);

/// counts[k] = number of faces of dimension k-1.
struct FVector {
    std::vector<BigInt> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& c, std::uint64_t budget = kDefaultFaceBudget);

/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, for k = 0..d.
std::vector<BigInt> h_vector(const FVector& f, int d);

/// Oriented boundary from faces of dimension k (columns) to dimension k-1
/// (rows). Removing the i-th smallest vertex contributes (-1)^i.
SparseMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper);
SparseMatrix boundary_matrix(const SimplicialComplex& c, int k);

/// Lists the faces of a complex of a given dimension, in any fixed order.
using FaceLister = std::function<std::vector<VertexSet>(int dim)>;

/// dim H~_i = (f_i - rank d_i) - rank d_{i+1}.
std::size_t reduced_homology_dim(const FaceLister& faces, int i, const FieldSpec& field);
std::size_t reduced_homology_dim(const SimplicialComplex& c, int i, const FieldSpec& field);

/// Every k-subset of `pool` satisfying `keep`, in lexicographic order.
std::vector<VertexSet> subsets_of_size(const VertexSet& pool, std::size_t k,
                                       const std::function<bool(const VertexSet&)>& keep = {});

}  // namespace lefforge
