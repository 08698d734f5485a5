#include <doctest.h>

#include "lefforge/criteria.hpp"

using namespace lefforge;

namespace {
BigInt Fof(int t, int m, int n) { return F(GridShape::make(t, m, n)); }
}  // namespace

TEST_CASE("F closed forms") {
    CHECK(Fof(2, 3, 6) == 0);
    CHECK(Fof(2, 6, 3) == 0);
    CHECK(Fof(2, 4, 4) == 0);
    CHECK(Fof(2, 3, 5) == -2);
    for (int t = 2; t <= 6; ++t) CHECK(Fof(t, t + 1, t + 1) == BigInt(-t * (t + 1) / 2));
    for (int t = 2; t <= 8; ++t) CHECK(Fof(t, t + 1, t + 2) * 24 == BigInt((t + 1) * (t + 2) * t * (t - 5)));
    for (int t = 2; t <= 4; ++t) CHECK(Fof(t, t + 2, t + 2) >= 0);
}

TEST_CASE("failure certificate") {
    CHECK(failure_certificate(GridShape::make(2, 4, 4)));
    CHECK_FALSE(failure_certificate(GridShape::make(2, 3, 5)));
    CHECK_FALSE(failure_certificate(GridShape::make(4, 5, 6)));
    CHECK_THROWS_AS(failure_certificate(GridShape::make(3, 3, 5)), ParameterError);
}

TEST_CASE("classification table") {
    CHECK(classify(GridShape::make(3, 4, 4)).main_theorem_case == MainTheoremCase::outside_theorem);
    CHECK(classify(GridShape::make(2, 4, 4)).main_theorem_case == MainTheoremCase::t2_fails);
    CHECK(classify(GridShape::make(2, 3, 5)).main_theorem_case == MainTheoremCase::outside_theorem);
    CHECK(classify(GridShape::make(2, 3, 6)).main_theorem_case == MainTheoremCase::t2_fails);
    CHECK(classify(GridShape::make(2, 3, 4)).main_theorem_case == MainTheoremCase::outside_theorem);
    CHECK(classify(GridShape::make(3, 4, 6)).main_theorem_case == MainTheoremCase::t3_fails);
    CHECK(classify(GridShape::make(3, 4, 5)).main_theorem_case == MainTheoremCase::outside_theorem);
    CHECK(classify(GridShape::make(5, 6, 7)).main_theorem_case == MainTheoremCase::t_ge4_fails);
    CHECK(classify(GridShape::make(5, 6, 6)).main_theorem_case == MainTheoremCase::outside_theorem);
    CHECK(classify(GridShape::make(4, 5, 6)).main_theorem_case == MainTheoremCase::t_ge4_fails);
    CHECK(classify(GridShape::make(3, 3, 7)).main_theorem_case == MainTheoremCase::t_equals_min_SLP);
    const auto r = classify(GridShape::make(4, 6, 6));
    CHECK(r.betti_floor == 4);
    CHECK(r.F_value == Fof(4, 6, 6));
    CHECK(r.F_nonnegative == (r.F_value >= 0));
    CHECK(to_string(MainTheoremCase::t_ge4_fails) == "t_ge4_fails");
}

TEST_CASE("property: F increases in m and n once (m-t)(n-t) >= 2") {
    for (int t = 2; t <= 5; ++t)
        for (int m = t + 1; m <= 12; ++m)
            for (int n = t + 1; n <= 12; ++n) {
                if ((m - t) * (n - t) < 2) continue;
                CAPTURE(t);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(Fof(t, m + 1, n) > Fof(t, m, n));
                CHECK(Fof(t, m, n + 1) > Fof(t, m, n));
            }
}

TEST_CASE("property: Vandermonde expansion and the row-count inequality") {
    for (int t = 2; t <= 5; ++t)
        for (int m = t + 1; m <= 12; ++m)
            for (int n = t + 1; n <= 12; ++n) {
                const int h = (m - t + 1) * (n - t + 1);
                BigInt rhs = 0;
                for (int j = 0; j <= t; ++j) rhs += binomial(n - t + 1, j) * binomial(h + t - 2, t - j);
                CHECK(binomial(h + (n - t + 1) + t - 2, t) == rhs);
                const bool holds = BigInt(n - t + 1) * binomial(h + t - 2, t - 1) >= binomial(m, t - 1) * binomial(n, t);
                // Needs (m-t)(n-t) >= 2; m = n = t+1 is a genuine exception.
                if ((m - t) * (n - t) >= 2) CHECK(holds);
                else if (m == n) CHECK_FALSE(holds);
            }
}
