#pragma once

// Closed-form side of the classification: F_t(m,n), the F >= 0 failure
// certificate, and the case table. Nothing here runs linear algebra.

#include <string>

#include "lefforge/exact_linalg.hpp"
#include "lefforge/grid_complex.hpp"

namespace lefforge {

enum class MainTheoremCase { t_equals_min_SLP, t2_fails, t3_fails, t_ge4_fails, outside_theorem };

std::string to_string(MainTheoremCase c);

struct CriterionReport {
    GridShape shape;
    BigInt F_value;
    bool F_nonnegative = false;
    MainTheoremCase main_theorem_case = MainTheoremCase::outside_theorem;
    int betti_floor = 0;
};

/// F_t(m,n) = C(h+t-2, t) - C(m,t) C(n,t).
BigInt F(const GridShape& shape);

/// F >= 0. Throws ParameterError when t = min(m,n).
bool failure_certificate(const GridShape& shape);

CriterionReport classify(const GridShape& shape);

}  // namespace lefforge
