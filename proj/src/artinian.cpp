#include "lefforge/artinian.hpp"

#include <set>

#include "lefforge/betti.hpp"
#include "lefforge/criteria.hpp"

namespace lefforge {

std::string to_string(RingKind r) { return r == RingKind::initial ? "initial" : "minors"; }
std::string to_string(Property p) { return p == Property::wlp ? "WLP" : "SLP"; }

std::string to_string(Certification c) {
    switch (c) {
        case Certification::holds_certified: return "holds_certified";
        case Certification::fails_certified: return "fails_certified";
        case Certification::fails_probabilistic: return "fails_probabilistic";
        case Certification::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

RingKind parse_ring(const std::string& s) {
    if (s == "initial") return RingKind::initial;
    if (s == "minors") return RingKind::minors;
    throw ParameterError("unknown ring '" + s + "' (expected initial or minors)");
}

Property parse_property(const std::string& s) {
    if (s == "WLP" || s == "wlp") return Property::wlp;
    if (s == "SLP" || s == "slp") return Property::slp;
    throw ParameterError("unknown property '" + s + "' (expected WLP or SLP)");
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
    int da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

std::vector<Monomial> monomials_of_degree(int h, int d) {
    std::vector<Monomial> out;
    if (h < 1 || d < 0) return out;
    Monomial m(static_cast<std::size_t>(h), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == m.size()) {
            m[pos] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[pos] = static_cast<std::uint8_t>(e);
            self(self, pos + 1, left - e);
        }
        m[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), degrevlex_greater);
    return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> ms) : monos(std::move(ms)) {
    std::sort(monos.begin(), monos.end(), degrevlex_greater);
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    where.reserve(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) where.emplace(monos[k], static_cast<std::uint32_t>(k));
}

std::uint32_t MonomialIndex::at(const Monomial& m) const {
    auto it = where.find(m);
    if (it == where.end()) throw std::logic_error("MonomialIndex: monomial not present");
    return it->second;
}

std::vector<std::pair<int, int>> required_positions(Property p, const HilbertFunction& hf) {
    std::vector<std::pair<int, int>> out;
    const int top = hf.top_degree();
    for (int j = 0; j <= top; ++j) {
        const int max_s = p == Property::wlp ? 1 : top + 1 - j;
        for (int s = 1; s <= max_s; ++s) out.emplace_back(j, s);
    }
    return out;
}

std::uint64_t companion_prime(std::uint64_t p) { return p == kSecondaryPrime ? kDefaultPrime : kSecondaryPrime; }

LefschetzVerdict lefschetz_verdict(const GridShape& shape, RingKind ring, Property property, const FieldSpec& field,
                                   const VerdictOptions& options) {
    if (options.trials < 1) throw ParameterError("lefschetz_verdict: trials must be at least 1");
    LefschetzVerdict v{shape, ring, property};
    v.trials_requested = options.trials;

    const bool floor_applies = ring == RingKind::initial && !shape.t_is_min();
    if (!shape.t_is_min()) v.F_value = F(shape);
    if (floor_applies) v.betti_lower_bound = omega_lower_bound(shape, FieldSpec::rationals()).value;
    const bool floor_certificate = floor_applies && *v.betti_lower_bound >= 1 && *v.F_value >= 0;

    std::set<std::uint64_t> primes;
    for (int k = 0; k < options.trials; ++k) {
        FieldSpec tf = field;
        if (tf.is_prime_field()) {
            tf.prime = k % 2 == 0 ? field.prime : companion_prime(field.prime);
            primes.insert(tf.prime);
        }
        tf.seed = k == 0 ? field.seed : mix_seed(field.seed, static_cast<std::uint64_t>(k));
        LefschetzTrial trial{tf.seed, tf};
        visit_field(tf, [&](const auto& f) {
            using Fld = std::decay_t<decltype(f)>;
            const auto red = Reduction<Fld>::build(shape, ring, f, tf.seed);
            trial.redraws = red.redraws();
            trial.hilbert = red.hilbert_function();
            const auto form = red.draw_form(mix_seed(tf.seed, 0x4c4c4c4cULL));
            trial.evidence = lefschetz_evidence(red, property, std::span<const typename Fld::value_type>(form));
        });
        trial.maximal_everywhere =
            std::all_of(trial.evidence.begin(), trial.evidence.end(), [](const RankEvidence& e) { return e.maximal(); });
        v.trials.push_back(std::move(trial));
        if (v.trials.back().maximal_everywhere) {
            v.witness_trial = v.trials.size() - 1;
            break;
        }
    }

    if (v.witness_trial) {
        if (floor_certificate)
            throw std::logic_error("lefschetz_verdict " + shape.label() +
                                   ": maximal rank observed although F >= 0 and the Omega bound is positive");
        v.outcome = Certification::holds_certified;
        return v;
    }
    if (floor_certificate) {
        v.outcome = Certification::fails_certified;
        v.certificate = "betti_floor_and_F";
        v.certificate_position = {shape.t() - 1, 1};
        return v;
    }
    v.outcome = (!field.is_prime_field() || primes.size() >= 2) ? Certification::fails_probabilistic
                                                                : Certification::inconclusive;
    return v;
}

}  // namespace lefforge
