#pragma once

// Artinian reductions of R/in(I_t) and R/I_t. Every grid variable is replaced
// by a random linear form in h fresh variables Y_1..Y_h; the quotient
// A = K[Y]/J is then built degree by degree as a monomial basis plus normal
// forms of the remaining products, so everything downstream is finite linear
// algebra.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lefforge/exact_linalg.hpp"
#include "lefforge/grid_complex.hpp"

namespace lefforge {

enum class RingKind { initial, minors };
enum class Property { wlp, slp };
enum class Certification { holds_certified, fails_certified, fails_probabilistic, inconclusive };

std::string to_string(RingKind r);
std::string to_string(Property p);
std::string to_string(Certification c);
RingKind parse_ring(const std::string& s);
Property parse_property(const std::string& s);

struct HilbertFunction {
    /// values[j] = dim A_j; the last entry is nonzero.
    std::vector<std::size_t> values;

    int top_degree() const noexcept { return static_cast<int>(values.size()) - 1; }
    std::size_t at(int j) const noexcept {
        return (j >= 0 && j < static_cast<int>(values.size())) ? values[static_cast<std::size_t>(j)] : 0;
    }
    std::size_t total() const noexcept {
        std::size_t s = 0;
        for (auto v : values) s += v;
        return s;
    }
    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

using Monomial = std::vector<std::uint8_t>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : m) h = (h ^ e) * 1099511628211ULL;
        return h;
    }
};

/// Degree-reverse-lexicographic comparison (Y_1 > Y_2 > ...).
bool degrevlex_greater(const Monomial& a, const Monomial& b);

/// All monomials of degree d in h variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int h, int d);

/// Exponent vectors of one degree with an index lookup.
struct MonomialIndex {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> where;

    explicit MonomialIndex(std::vector<Monomial> ms = {});
    std::size_t size() const noexcept { return monos.size(); }
    std::uint32_t at(const Monomial& m) const;
};

template <class Field>
using SparseVector = std::vector<std::pair<std::uint32_t, typename Field::value_type>>;

// ---------------------------------------------------------------------------
// Incremental row echelon form over a fixed column order (column 0 pivots first).

template <class Field>
class Echelon {
public:
    using value_type = typename Field::value_type;

    Echelon(const Field& f, std::size_t cols) : f_(f), acc_(cols, f.zero()), pivot_of_(cols, -1) {}

    std::size_t cols() const noexcept { return acc_.size(); }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_pivot(std::size_t c) const noexcept { return pivot_of_[c] >= 0; }

    /// Adds a row given as (column, value) pairs; duplicate columns are summed.
    /// Returns true if it increased the rank.
    bool add_row(const SparseVector<Field>& row) {
        if (row.empty()) return false;
        std::size_t first = acc_.size();
        for (const auto& [c, v] : row) {
            acc_[c] = f_.add(acc_[c], v);
            first = std::min<std::size_t>(first, c);
        }
        std::size_t lead = acc_.size();
        for (std::size_t c = first; c < acc_.size(); ++c) {
            if (f_.is_zero(acc_[c])) continue;
            const auto p = pivot_of_[c];
            if (p < 0) {
                if (lead == acc_.size()) lead = c;
                continue;
            }
            const auto factor = acc_[c];
            for (const auto& [pc, pv] : rows_[static_cast<std::size_t>(p)]) acc_[pc] = f_.sub_mul(acc_[pc], factor, pv);
        }
        if (lead == acc_.size()) return false;
        const auto inv = f_.inv(acc_[lead]);
        SparseVector<Field> stored;
        for (std::size_t c = lead; c < acc_.size(); ++c) {
            if (f_.is_zero(acc_[c])) continue;
            stored.emplace_back(static_cast<std::uint32_t>(c), f_.mul(acc_[c], inv));
            acc_[c] = f_.zero();
        }
        pivot_of_[lead] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(stored));
        return true;
    }

    /// Clears pivot columns out of every stored row, so each row reads
    /// "lead = -(combination of non-pivot columns)".
    void back_substitute() {
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (lead, row)
        for (std::size_t r = 0; r < rows_.size(); ++r) order.emplace_back(rows_[r].front().first, r);
        std::sort(order.begin(), order.end(), std::greater<>());
        for (auto [lead, r] : order) {
            auto& row = rows_[r];
            bool needs = false;
            for (std::size_t k = 1; k < row.size() && !needs; ++k) needs = is_pivot(row[k].first);
            if (!needs) continue;
            for (const auto& [c, v] : row) acc_[c] = v;
            for (std::size_t k = 1; k < row.size(); ++k) {
                const auto c = row[k].first;
                const auto p = pivot_of_[c];
                if (p < 0 || f_.is_zero(acc_[c])) continue;
                const auto factor = acc_[c];
                for (const auto& [pc, pv] : rows_[static_cast<std::size_t>(p)]) acc_[pc] = f_.sub_mul(acc_[pc], factor, pv);
            }
            SparseVector<Field> out;
            for (std::size_t c = lead; c < acc_.size(); ++c) {
                if (f_.is_zero(acc_[c])) continue;
                out.emplace_back(static_cast<std::uint32_t>(c), acc_[c]);
                acc_[c] = f_.zero();
            }
            row = std::move(out);
        }
    }

    /// Stored row whose leading column is c.
    const SparseVector<Field>& pivot_row(std::size_t c) const { return rows_[static_cast<std::size_t>(pivot_of_[c])]; }

private:
    const Field& f_;
    std::vector<value_type> acc_;
    std::vector<std::int64_t> pivot_of_;
    std::vector<SparseVector<Field>> rows_;
};

// ---------------------------------------------------------------------------
// The reduction itself

template <class Field>
class Reduction {
public:
    using value_type = typename Field::value_type;
    using Matrix = DenseMatrix<Field>;

    /// Draws the substitution from the seed; redraws (up to kMaxRedraws times)
    /// until the images cut out an Artinian quotient whose Hilbert function
    /// sums to the number of facets of Delta. Throws DegenerateDrawError.
    static Reduction build(const GridShape& shape, RingKind ring, const Field& field, std::uint64_t seed) {
        for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
            const auto s = mix_seed(seed, 0x5eed0000ULL + static_cast<std::uint64_t>(attempt));
            auto sub = random_linear_forms(field, shape.vertex_count(), static_cast<std::size_t>(shape.height()), s);
            auto red = from_substitution(shape, ring, field, std::move(sub));
            red.seed_ = seed;
            red.redraws_ = attempt;
            if (red.valid_) return red;
        }
        throw DegenerateDrawError("build_reduction " + shape.label() + ": no draw gave a system of parameters after " +
                                  std::to_string(kMaxRedraws) + " redraws");
    }

    /// Reduction for a given mn x h substitution. Check is_valid().
    static Reduction from_substitution(const GridShape& shape, RingKind ring, const Field& field, Matrix substitution) {
        if (substitution.rows() != shape.vertex_count() || substitution.cols() != static_cast<std::size_t>(shape.height()))
            throw ParameterError("from_substitution: substitution must be mn x h");
        Reduction red(field, shape.height(), shape.t());
        red.shape_ = shape;
        red.ring_ = ring;
        red.substitution_ = std::move(substitution);
        red.generators_ = red.generator_images(ring);
        const auto expected = facet_count_lgv(shape);
        const std::size_t limit = expected > BigInt(std::numeric_limits<std::size_t>::max() / 2)
                                      ? std::numeric_limits<std::size_t>::max() / 2
                                      : static_cast<std::size_t>(expected);
        // The h-vector of Delta is the Hilbert function of any valid reduction;
        // it lets each degree stop adding relations once the rank is reached.
        std::vector<std::size_t> target;
        for (const auto& v : delta_h_vector(shape)) target.push_back(static_cast<std::size_t>(v));
        red.valid_ = red.compute(shape.krull_dimension(), limit, &target) && BigInt(red.hf_.total()) == expected;
        return red;
    }

    /// Quotient by arbitrary degree-t forms (dense over monomials_of_degree(h, t)).
    /// The quotient must vanish by degree `cap`; otherwise is_valid() is false.
    static Reduction from_generators(const Field& field, int h, int t, std::vector<std::vector<value_type>> gens,
                                     int cap) {
        Reduction red(field, h, t);
        for (auto& g : gens) {
            if (g.size() != red.top_monos_.size()) throw ParameterError("from_generators: wrong generator length");
            SparseVector<Field> sv;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (!field.is_zero(g[k])) sv.emplace_back(static_cast<std::uint32_t>(k), g[k]);
            red.generators_.push_back(std::move(sv));
        }
        red.valid_ = red.compute(cap);
        return red;
    }

    const Field& field() const noexcept { return field_; }
    int variables() const noexcept { return h_; }
    int generator_degree() const noexcept { return t_; }
    const std::optional<GridShape>& shape() const noexcept { return shape_; }
    RingKind ring() const noexcept { return ring_; }
    bool is_valid() const noexcept { return valid_; }
    std::uint64_t seed() const noexcept { return seed_; }
    int redraws() const noexcept { return redraws_; }
    const Matrix& substitution() const noexcept { return substitution_; }
    /// Images of the generators, sparse over monomials_of_degree(h, t).
    const std::vector<SparseVector<Field>>& generators() const noexcept { return generators_; }
    const std::vector<Monomial>& generator_monomials() const noexcept { return top_monos_.monos; }
    const HilbertFunction& hilbert_function() const noexcept { return hf_; }

    /// Standard monomials spanning A_d.
    std::vector<Monomial> basis(int d) const {
        std::vector<Monomial> out;
        if (d < 0 || d >= static_cast<int>(levels_.size())) return out;
        const auto& lv = levels_[static_cast<std::size_t>(d)];
        for (auto p : lv.basis) out.push_back(lv.span[p]);
        return out;
    }

    /// Multiplication by the linear form sum_i form[i] Y_i from A_d to A_{d+1}
    /// (HF(d+1) x HF(d)).
    Matrix multiplication_matrix(std::span<const value_type> form, int d) const {
        if (form.size() != static_cast<std::size_t>(h_)) throw ParameterError("multiplication_matrix: form has wrong length");
        const std::size_t src = hf_.at(d), dst = hf_.at(d + 1);
        Matrix m(dst, src, field_.zero());
        if (src == 0 || dst == 0) return m;
        const auto& lv = levels_[static_cast<std::size_t>(d)];
        const auto& nx = levels_[static_cast<std::size_t>(d + 1)];
        for (std::size_t s = 0; s < src; ++s) {
            for (std::size_t i = 0; i < static_cast<std::size_t>(h_); ++i) {
                const auto& c = form[i];
                if (field_.is_zero(c)) continue;
                const auto p = lv.times[s * static_cast<std::size_t>(h_) + i];
                const auto std_idx = nx.std_index[p];
                if (std_idx >= 0) {
                    auto& cell = m(static_cast<std::size_t>(std_idx), s);
                    cell = field_.add(cell, c);
                } else {
                    for (const auto& [k, v] : nx.nf[p]) m(k, s) = field_.add(m(k, s), field_.mul(c, v));
                }
            }
        }
        return m;
    }

    /// Multiplication by the s-th power of the form from A_j to A_{j+s}.
    Matrix power_matrix(std::span<const value_type> form, int j, int s) const {
        Matrix acc = identity_matrix(field_, hf_.at(j));
        for (int k = 0; k < s; ++k) acc = multiply(field_, multiplication_matrix(form, j + k), acc);
        return acc;
    }

    struct RankTriple {
        std::size_t dim_source = 0;
        std::size_t dim_target = 0;
        std::size_t rank = 0;
    };

    RankTriple multiplication_rank(std::span<const value_type> form, int j, int s) const {
        if (s < 1 || j < 0) throw ParameterError("multiplication_rank: need s >= 1 and j >= 0");
        RankTriple r{hf_.at(j), hf_.at(j + s), 0};
        if (r.dim_source == 0 || r.dim_target == 0) return r;
        r.rank = lefforge::rank(field_, power_matrix(form, j, s));
        return r;
    }

    /// socle[j] = HF(j) - rank of the stacked maps x Y_i : A_j -> A_{j+1}.
    std::vector<std::size_t> socle_dimensions() const {
        std::vector<std::size_t> out;
        for (int j = 0; j <= hf_.top_degree(); ++j) {
            const std::size_t src = hf_.at(j), dst = hf_.at(j + 1);
            if (dst == 0) {
                out.push_back(src);
                continue;
            }
            Matrix stacked(dst * static_cast<std::size_t>(h_), src, field_.zero());
            std::vector<value_type> e(static_cast<std::size_t>(h_), field_.zero());
            for (int i = 0; i < h_; ++i) {
                e[static_cast<std::size_t>(i)] = field_.one();
                const auto block = multiplication_matrix(e, j);
                e[static_cast<std::size_t>(i)] = field_.zero();
                for (std::size_t r = 0; r < dst; ++r)
                    for (std::size_t c = 0; c < src; ++c) stacked(static_cast<std::size_t>(i) * dst + r, c) = block(r, c);
            }
            out.push_back(src - lefforge::rank(field_, std::move(stacked)));
        }
        return out;
    }

    /// True iff the images span all degree-t forms, i.e. J = (Y_1..Y_h)^t.
    bool power_ideal_check() const { return hf_.at(t_) == 0; }

    /// Random element of R_1 (nonzero coefficients over prime fields), pulled
    /// back through the substitution to a form in Y.
    std::vector<value_type> draw_form(std::uint64_t seed) const {
        Rng rng(seed);
        std::vector<value_type> out(static_cast<std::size_t>(h_), field_.zero());
        const bool nonzero = std::is_same_v<Field, PrimeField>;
        if (!shape_) {
            for (auto& v : out) v = field_.random(rng, nonzero);
            return out;
        }
        for (std::size_t x = 0; x < substitution_.rows(); ++x) {
            const auto c = field_.random(rng, nonzero);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(out[i], field_.mul(c, substitution_(x, i)));
        }
        return out;
    }

private:
    struct Level {
        std::vector<Monomial> span;            // P_d, descending
        std::vector<std::int32_t> std_index;   // P index -> position in basis, or -1
        std::vector<SparseVector<Field>> nf;   // P index -> normal form over basis (non-standard only)
        std::vector<std::uint32_t> basis;      // P indices of standard monomials
        std::vector<std::uint32_t> times;      // basis s, variable i -> P_{d+1} index of Y_i * s
    };

    Reduction(const Field& field, int h, int t)
        : field_(field), h_(h), t_(t), top_monos_(monomials_of_degree(h, t)) {
        if (h < 1 || t < 1) throw ParameterError("Reduction: need h >= 1 and t >= 1");
    }

    std::vector<value_type> linear_form(std::size_t vertex) const {
        std::vector<value_type> f(static_cast<std::size_t>(h_));
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = substitution_(vertex, i);
        return f;
    }

    // Dense polynomial times a linear form; degrees tracked by the caller.
    std::vector<value_type> times_linear(const std::vector<value_type>& poly, int deg,
                                         const std::vector<value_type>& lin) const {
        const auto& from = monomial_table(deg);
        const auto& to = monomial_table(deg + 1);
        std::vector<value_type> out(to.size(), field_.zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (field_.is_zero(poly[k])) continue;
            Monomial m = from.monos[k];
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (field_.is_zero(lin[i])) continue;
                ++m[i];
                const auto idx = to.at(m);
                out[idx] = field_.add(out[idx], field_.mul(poly[k], lin[i]));
                --m[i];
            }
        }
        return out;
    }

    const MonomialIndex& monomial_table(int d) const {
        while (static_cast<int>(tables_.size()) <= d)
            tables_.emplace_back(monomials_of_degree(h_, static_cast<int>(tables_.size())));
        return tables_[static_cast<std::size_t>(d)];
    }

    std::vector<SparseVector<Field>> generator_images(RingKind ring) const {
        const auto& shape = *shape_;
        const auto ideal = initial_ideal_generators(shape);
        std::vector<SparseVector<Field>> out;
        const std::vector<value_type> one{field_.one()};
        for (const auto& g : ideal.generators) {
            const auto pts = g.members();  // ascending = the diagonal, row by row
            std::vector<int> rows, cols;
            for (auto v : pts) {
                rows.push_back(shape.point(v).row);
                cols.push_back(shape.point(v).col);
            }
            std::vector<value_type> poly;
            if (ring == RingKind::initial) {
                poly = one;
                for (std::size_t k = 0; k < pts.size(); ++k) poly = times_linear(poly, static_cast<int>(k), linear_form(pts[k]));
            } else {
                poly = minor_polynomial(rows, cols);
            }
            SparseVector<Field> sv;
            for (std::size_t k = 0; k < poly.size(); ++k)
                if (!field_.is_zero(poly[k])) sv.emplace_back(static_cast<std::uint32_t>(k), poly[k]);
            out.push_back(std::move(sv));
        }
        return out;
    }

    // Laplace expansion along rows with memoization over column subsets.
    std::vector<value_type> minor_polynomial(const std::vector<int>& rows, const std::vector<int>& cols) const {
        const std::size_t k = rows.size();
        std::unordered_map<std::uint32_t, std::vector<value_type>> prev{{0u, {field_.one()}}};
        for (std::size_t r = 0; r < k; ++r) {
            std::unordered_map<std::uint32_t, std::vector<value_type>> next;
            for (const auto& [mask, poly] : prev) {
                for (std::size_t c = 0; c < k; ++c) {
                    if (mask & (1u << c)) continue;
                    const std::uint32_t grown = mask | (1u << c);
                    // Sign of placing column c after the columns already used in mask.
                    int above = 0;
                    for (std::size_t q = c + 1; q < k; ++q)
                        if (mask & (1u << q)) ++above;
                    auto term = times_linear(poly, static_cast<int>(r),
                                             linear_form(shape_->index(rows[r], cols[c])));
                    auto& dst = next[grown];
                    if (dst.empty()) dst.assign(term.size(), field_.zero());
                    for (std::size_t q = 0; q < term.size(); ++q)
                        dst[q] = (above % 2) ? field_.sub(dst[q], term[q]) : field_.add(dst[q], term[q]);
                }
            }
            prev = std::move(next);
        }
        return prev.begin()->second;
    }

    // Builds the levels; false if A_{cap+1} != 0 or the dimensions add up past
    // total_limit (a draw that is not a system of parameters).
    // A target Hilbert function only shortcuts elimination: rows span a subspace
    // of J, so reaching |P| - target[d] relations already pins down A_d.
    bool compute(int cap, std::size_t total_limit = std::numeric_limits<std::size_t>::max(),
                 const std::vector<std::size_t>* target = nullptr) {
        levels_.clear();
        Level zero;
        zero.span.push_back(Monomial(static_cast<std::size_t>(h_), 0));
        zero.std_index.push_back(0);
        zero.nf.emplace_back();
        zero.basis.push_back(0);
        levels_.push_back(std::move(zero));
        hf_.values = {1};
        for (int d = 0;; ++d) {
            auto& cur = levels_[static_cast<std::size_t>(d)];
            // P_{d+1} = { Y_i s : s standard in degree d }.
            std::vector<Monomial> prods;
            prods.reserve(cur.basis.size() * static_cast<std::size_t>(h_));
            for (auto p : cur.basis) {
                Monomial m = cur.span[p];
                for (int i = 0; i < h_; ++i) {
                    ++m[static_cast<std::size_t>(i)];
                    prods.push_back(m);
                    --m[static_cast<std::size_t>(i)];
                }
            }
            MonomialIndex span(std::move(prods));
            cur.times.resize(cur.basis.size() * static_cast<std::size_t>(h_));
            for (std::size_t s = 0; s < cur.basis.size(); ++s) {
                Monomial m = cur.span[cur.basis[s]];
                for (int i = 0; i < h_; ++i) {
                    ++m[static_cast<std::size_t>(i)];
                    cur.times[s * static_cast<std::size_t>(h_) + static_cast<std::size_t>(i)] = span.at(m);
                    --m[static_cast<std::size_t>(i)];
                }
            }
            Level next;
            next.span = span.monos;
            const std::size_t ncols = next.span.size();
            Echelon<Field> ech(field_, ncols);
            if (d + 1 == t_) {
                for (const auto& g : generators_) {
                    SparseVector<Field> row;
                    for (const auto& [k, v] : g) row.emplace_back(span.at(top_monos_.monos[k]), v);
                    ech.add_row(row);
                }
            } else if (d + 1 > t_) {
                std::size_t stop = ncols;
                if (target) {
                    const auto want = static_cast<std::size_t>(d + 1) < target->size() ? (*target)[static_cast<std::size_t>(d + 1)] : 0;
                    if (want <= ncols) stop = ncols - want;
                }
                add_koszul_rows(d, ech, stop);
            }
            ech.back_substitute();
            next.std_index.assign(ncols, -1);
            next.nf.assign(ncols, {});
            for (std::size_t c = 0; c < ncols; ++c) {
                if (ech.is_pivot(c)) continue;
                next.std_index[c] = static_cast<std::int32_t>(next.basis.size());
                next.basis.push_back(static_cast<std::uint32_t>(c));
            }
            for (std::size_t c = 0; c < ncols; ++c) {
                if (!ech.is_pivot(c)) continue;
                const auto& row = ech.pivot_row(c);
                SparseVector<Field> nf;
                for (std::size_t k = 1; k < row.size(); ++k)
                    nf.emplace_back(static_cast<std::uint32_t>(next.std_index[row[k].first]), field_.neg(row[k].second));
                next.nf[c] = std::move(nf);
            }
            const std::size_t dim = next.basis.size();
            levels_.push_back(std::move(next));
            if (dim == 0) return true;
            if (d + 1 > cap) return false;
            hf_.values.push_back(dim);
            if (hf_.total() > total_limit) return false;
        }
    }

    // Expansion of Y_i * (element of P_d) in P_{d+1} coordinates.
    void append_product(SparseVector<Field>& row, int d, std::uint32_t p, std::size_t i, bool negate) const {
        const auto& lv = levels_[static_cast<std::size_t>(d)];
        const auto h = static_cast<std::size_t>(h_);
        const auto sidx = lv.std_index[p];
        if (sidx >= 0) {
            row.emplace_back(lv.times[static_cast<std::size_t>(sidx) * h + i], negate ? field_.neg(field_.one()) : field_.one());
            return;
        }
        for (const auto& [s, v] : lv.nf[p]) row.emplace_back(lv.times[s * h + i], negate ? field_.neg(v) : v);
    }

    // Relations Y_i (Y_j a) - Y_j (Y_i a) for a standard in degree d-1; those
    // where both products are standard only restate commutativity.
    //
    // When exactly one product is standard, say Y_i a, the row leads with the
    // monomial Y_i Y_j a. One such row per distinct lead is independent of the
    // rest, and feeding them smallest lead first keeps every stored row free of
    // other pivots. Everything else follows with ordinary elimination.
    void add_koszul_rows(int d, Echelon<Field>& ech, std::size_t stop_rank) const {
        const auto& prev = levels_[static_cast<std::size_t>(d - 1)];
        const auto& cur = levels_[static_cast<std::size_t>(d)];
        const auto h = static_cast<std::size_t>(h_);
        SparseVector<Field> row;
        auto emit = [&](std::size_t a, std::size_t i, std::size_t j) {
            row.clear();
            append_product(row, d, prev.times[a * h + j], i, false);
            append_product(row, d, prev.times[a * h + i], j, true);
            ech.add_row(row);
            return ech.rank() >= stop_rank;
        };
        struct Candidate {
            std::uint32_t lead;
            std::uint32_t a, i, j;
        };
        std::vector<Candidate> singles, rest;
        std::vector<char> seen(ech.cols(), 0);
        for (std::size_t a = 0; a < prev.basis.size(); ++a) {
            for (std::size_t i = 0; i < h; ++i) {
                const auto z = prev.times[a * h + i];
                const bool z_std = cur.std_index[z] >= 0;
                for (std::size_t j = i + 1; j < h; ++j) {
                    const auto x = prev.times[a * h + j];
                    const bool x_std = cur.std_index[x] >= 0;
                    if (x_std && z_std) continue;
                    const Candidate c{0, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j)};
                    if (x_std == z_std) {
                        rest.push_back(c);
                        continue;
                    }
                    const auto lead = x_std ? cur.times[static_cast<std::size_t>(cur.std_index[x]) * h + i]
                                            : cur.times[static_cast<std::size_t>(cur.std_index[z]) * h + j];
                    if (seen[lead]) {
                        rest.push_back(c);
                        continue;
                    }
                    seen[lead] = 1;
                    singles.push_back({lead, c.a, c.i, c.j});
                }
            }
        }
        std::sort(singles.begin(), singles.end(), [](const Candidate& l, const Candidate& r) { return l.lead > r.lead; });
        for (const auto& c : singles)
            if (emit(c.a, c.i, c.j)) return;
        for (const auto& c : rest)
            if (emit(c.a, c.i, c.j)) return;
    }

    Field field_;
    int h_;
    int t_;
    MonomialIndex top_monos_;
    mutable std::deque<MonomialIndex> tables_;
    std::optional<GridShape> shape_;
    RingKind ring_ = RingKind::initial;
    Matrix substitution_;
    std::vector<SparseVector<Field>> generators_;
    std::vector<Level> levels_;
    HilbertFunction hf_;
    bool valid_ = false;
    std::uint64_t seed_ = 0;
    int redraws_ = 0;
};

// ---------------------------------------------------------------------------
// Verdicts

struct RankEvidence {
    int j = 0;
    int s = 0;
    std::size_t dim_source = 0;
    std::size_t dim_target = 0;
    std::size_t rank = 0;
    bool maximal() const noexcept { return rank == std::min(dim_source, dim_target); }
};

struct LefschetzTrial {
    std::uint64_t seed = 0;
    FieldSpec field;
    int redraws = 0;
    HilbertFunction hilbert;
    std::vector<RankEvidence> evidence;
    bool maximal_everywhere = false;
};

struct LefschetzVerdict {
    GridShape shape;
    RingKind ring = RingKind::initial;
    Property property = Property::wlp;
    Certification outcome = Certification::inconclusive;
    int trials_requested = 0;
    std::vector<LefschetzTrial> trials;
    std::optional<std::size_t> witness_trial;
    /// Filled whenever t < min(m,n).
    std::optional<BigInt> F_value;
    /// Omega lower bound over the rationals, for the initial ring with t < min(m,n).
    std::optional<std::uint64_t> betti_lower_bound;
    /// "betti_floor_and_F" when the deterministic certificate fired, else empty.
    std::string certificate;
    /// Position (j, s) where the certificate forbids maximal rank.
    std::optional<std::pair<int, int>> certificate_position;
};

/// Positions (j, s) checked for the property given the Hilbert function.
std::vector<std::pair<int, int>> required_positions(Property p, const HilbertFunction& hf);

template <class Field>
std::vector<RankEvidence> lefschetz_evidence(const Reduction<Field>& red, Property p,
                                             std::span<const typename Field::value_type> form) {
    std::vector<RankEvidence> out;
    const auto& hf = red.hilbert_function();
    const int top = hf.top_degree();
    for (int j = 0; j <= top; ++j) {
        const int max_s = p == Property::wlp ? 1 : top + 1 - j;
        auto acc = identity_matrix(red.field(), hf.at(j));
        for (int s = 1; s <= max_s; ++s) {
            acc = multiply(red.field(), red.multiplication_matrix(form, j + s - 1), acc);
            RankEvidence e{j, s, hf.at(j), hf.at(j + s), 0};
            if (e.dim_source && e.dim_target) e.rank = rank(red.field(), acc);
            out.push_back(e);
        }
    }
    return out;
}

struct VerdictOptions {
    int trials = 3;
};

LefschetzVerdict lefschetz_verdict(const GridShape& shape, RingKind ring, Property property, const FieldSpec& field,
                                   const VerdictOptions& options = {});

/// The prime paired with p for dual-prime runs.
std::uint64_t companion_prime(std::uint64_t p);

}  // namespace lefforge
