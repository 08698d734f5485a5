#include "lefforge/criteria.hpp"

namespace lefforge {

std::string to_string(MainTheoremCase c) {
    switch (c) {
        case MainTheoremCase::t_equals_min_SLP: return "t_equals_min_SLP";
        case MainTheoremCase::t2_fails: return "t2_fails";
        case MainTheoremCase::t3_fails: return "t3_fails";
        case MainTheoremCase::t_ge4_fails: return "t_ge4_fails";
        case MainTheoremCase::outside_theorem: return "outside_theorem";
    }
    return "outside_theorem";
}

BigInt F(const GridShape& s) {
    return binomial(s.height() + s.t() - 2, s.t()) - binomial(s.m(), s.t()) * binomial(s.n(), s.t());
}

bool failure_certificate(const GridShape& s) {
    if (s.t_is_min()) throw ParameterError("failure_certificate: needs t < min(m,n)");
    return F(s) >= 0;
}

CriterionReport classify(const GridShape& s) {
    CriterionReport r{s, F(s), false, MainTheoremCase::outside_theorem, s.t()};
    r.F_nonnegative = r.F_value >= 0;
    const int t = s.t(), mn = s.m() * s.n();
    if (s.t_is_min()) r.main_theorem_case = MainTheoremCase::t_equals_min_SLP;
    else if (t == 2 && mn >= 16) r.main_theorem_case = MainTheoremCase::t2_fails;
    else if (t == 3 && mn >= 24) r.main_theorem_case = MainTheoremCase::t3_fails;
    else if (t >= 4 && mn >= (t + 1) * (t + 2)) r.main_theorem_case = MainTheoremCase::t_ge4_fails;
    return r;
}

}  // namespace lefforge
