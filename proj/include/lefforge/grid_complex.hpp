#pragma once

// The m x n grid, the diagonal initial ideal of the t-minors, and its
// Stanley-Reisner complex Delta(t,m,n) together with the regions V_a and
// subcomplexes Omega_a.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lefforge/exact_linalg.hpp"
#include "lefforge/simplicial.hpp"
#include "lefforge/vertex_set.hpp"

namespace lefforge {

inline constexpr std::uint64_t kDefaultFacetBudget = 1'000'000;

struct GridPoint {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

class GridShape {
public:
    /// Throws ParameterError unless 2 <= t <= min(m,n), t < max(m,n) and m*n <= 256.
    static GridShape make(int t, int m, int n);

    int t() const noexcept { return t_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int height() const noexcept { return (m_ - t_ + 1) * (n_ - t_ + 1); }
    /// Krull dimension of R/I_t: (t-1)(m+n-t+1), also the facet size of Delta.
    int krull_dimension() const noexcept { return (t_ - 1) * (m_ + n_ - t_ + 1); }
    std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(m_ * n_); }
    bool t_is_min() const noexcept { return t_ == std::min(m_, n_); }

    std::size_t index(int row, int col) const;
    std::size_t index(GridPoint p) const { return index(p.row, p.col); }
    GridPoint point(std::size_t v) const;
    /// "(t,m,n)".
    std::string label() const;
    /// "{(1,1),(2,2)}".
    std::string format(const VertexSet& s) const;

    friend bool operator==(const GridShape&, const GridShape&) = default;

private:
    GridShape(int t, int m, int n) : t_(t), m_(m), n_(n) {}
    int t_, m_, n_;
};

struct MonomialIdeal {
    GridShape shape;
    std::vector<VertexSet> generators;
};

struct PathFamily {
    std::vector<std::vector<GridPoint>> paths;
    /// One 'D' (row+1) / 'L' (col-1) string per path.
    std::vector<std::string> steps;
    VertexSet vertices;
};

/// Main diagonals of all t x t submatrices, sorted.
MonomialIdeal initial_ideal_generators(const GridShape& shape);

/// True iff s contains no t points with strictly increasing rows and columns.
bool is_face(const GridShape& shape, const VertexSet& s);
/// Longest chain with strictly increasing rows and columns inside s.
int longest_increasing_chain(const GridShape& shape, const VertexSet& s);

/// Families of nonintersecting paths (i,n) -> (m,i), i = 1..t-1, in
/// lexicographic order of their concatenated step strings ('D' < 'L').
/// Throws BudgetError when more than `budget` families exist.
std::vector<PathFamily> enumerate_path_families(const GridShape& shape, std::uint64_t budget = kDefaultFacetBudget);
/// Vertex sets of the path families, deduplicated, in enumeration order.
std::vector<VertexSet> enumerate_facets(const GridShape& shape, std::uint64_t budget = kDefaultFacetBudget);
SimplicialComplex delta_complex(const GridShape& shape, std::uint64_t budget = kDefaultFacetBudget);

/// det[ C((m-i)+(n-j), m-i) ]_{i,j=1..t-1}.
BigInt facet_count_lgv(const GridShape& shape);

/// f-vector of Delta by a row-by-row transfer over chain profiles; needs no
/// facet list. counts[k] = number of faces with k vertices.
FVector delta_f_vector(const GridShape& shape);
/// h-vector of Delta with trailing zeros dropped.
std::vector<BigInt> delta_h_vector(const GridShape& shape);

/// V_a(t,m,n); a in [0, t-1].
VertexSet vertex_region(const GridShape& shape, int a);

/// Maximal faces of Delta inside u, found by search over u (no facet list).
std::vector<VertexSet> maximal_faces_within(const GridShape& shape, const VertexSet& u);

/// Omega_a: restriction of Delta to V_a. Restricts the facet list when it fits
/// the budget, otherwise searches V_a directly; both give the same complex.
SimplicialComplex omega(const GridShape& shape, int a, std::uint64_t budget = kDefaultFacetBudget);

/// Faces of Delta restricted to u with k+1 vertices; the lister form used by
/// homology computations over vertex subsets.
std::vector<VertexSet> restricted_faces(const GridShape& shape, const VertexSet& u, int k);

}  // namespace lefforge
