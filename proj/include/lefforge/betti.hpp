#pragma once

// Graded Betti numbers of R/in(I_t) through Hochster's formula:
//   beta_{i,j}(R/I_Delta) = sum over |U| = j of dim H~_{j-i-1}(Delta_U).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lefforge/exact_linalg.hpp"
#include "lefforge/grid_complex.hpp"

namespace lefforge {

inline constexpr std::uint64_t kDefaultBettiBudget = 10'000'000;

enum class BettiKind { exact, lower_bound };
std::string to_string(BettiKind k);

struct BettiWitness {
    VertexSet subset;
    std::size_t homology_dim = 0;
};

struct BettiResult {
    int i = 0;
    int j = 0;
    std::uint64_t value = 0;
    BettiKind kind = BettiKind::exact;
    /// Subsets with nonzero contribution (all V_a for the lower bound), ascending.
    std::vector<BettiWitness> witnesses;
    std::uint64_t subsets_examined = 0;
    /// Whether the (1,n)/(m,1) pruning for the t = 2 corner was applied.
    bool pruned = false;
};

/// Exact beta_{i,j}. Throws BudgetError when the number of subsets to visit
/// exceeds `budget`. Subset ranges are split over `threads` workers; the
/// result does not depend on the thread count.
BettiResult hochster_betti(const GridShape& shape, int i, int j, const FieldSpec& field,
                           std::uint64_t budget = kDefaultBettiBudget, unsigned threads = 1);

/// Sum over a of dim H~_{t-2}(Omega_a), a lower bound for beta_{h,h+t-1}.
BettiResult omega_lower_bound(const GridShape& shape, const FieldSpec& field);

/// Every U of size (m-1)(n-1)+1 with dim H~_0(Delta(2,m,n)_U) >= 1, ascending.
std::vector<BettiWitness> classify_h0_subcomplexes(int m, int n, const FieldSpec& field,
                                                   std::uint64_t budget = kDefaultBettiBudget, unsigned threads = 1);

/// Reduced homology of Delta restricted to u.
std::size_t restricted_homology_dim(const GridShape& shape, const VertexSet& u, int i, const FieldSpec& field);

}  // namespace lefforge
