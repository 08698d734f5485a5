#pragma once

// Exact scalars (prime fields, rationals), dense and sparse matrices, and
// rank / null-space computation. Everything downstream that reports a
// dimension goes through this header.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lefforge/errors.hpp"

namespace lefforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;    // 2^61 - 1
inline constexpr std::uint64_t kSecondaryPrime = 2305843009213693921ULL;  // 2^61 - 31
inline constexpr std::uint64_t kDefaultSeed = 20240511ULL;
inline constexpr int kMaxRedraws = 8;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Bareiss fraction-free determinant of a square integer matrix.
BigInt determinant(std::vector<std::vector<BigInt>> m);

struct FieldSpec {
    enum class Kind { prime, rational };

    Kind kind = Kind::prime;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;

    /// Throws ParameterError unless p is a prime below 2^63.
    static FieldSpec prime_field(std::uint64_t p = kDefaultPrime, std::uint64_t seed = kDefaultSeed);
    static FieldSpec rationals(std::uint64_t seed = kDefaultSeed);

    bool is_prime_field() const noexcept { return kind == Kind::prime; }
    /// "F_p" with the modulus spelled out, or "QQ".
    std::string describe() const;

    /// Same field with a different seed.
    FieldSpec with_seed(std::uint64_t s) const {
        FieldSpec f = *this;
        f.seed = s;
        return f;
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// ---------------------------------------------------------------------------
// Randomness

/// splitmix64 finalizer; used to derive independent per-task seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Thin wrapper over mt19937_64 with a portable bounded draw
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t in_range(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Fields

class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    FieldSpec spec(std::uint64_t seed) const { return FieldSpec::prime_field(p_, seed); }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(std::int64_t v) const noexcept;
    bool is_zero(value_type a) const noexcept { return a == 0; }

    value_type add(value_type a, value_type b) const noexcept {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
        if (fold_ != 0) {
            // p = 2^bits - fold with bits >= 42: two folds bring x below 2p.
            const unsigned __int128 y = (x & mask_) + (x >> bits_) * fold_;
            auto r = static_cast<std::uint64_t>(y & mask_) + static_cast<std::uint64_t>(y >> bits_) * fold_;
            while (r >= p_) r -= p_;
            return r;
        }
        return static_cast<std::uint64_t>(x % p_);
    }
    /// Subtracts f*b from a.
    value_type sub_mul(value_type a, value_type f, value_type b) const noexcept { return sub(a, mul(f, b)); }
    value_type inv(value_type a) const;

    /// Uniform draw; nonzero draws avoid 0.
    value_type random(Rng& rng, bool nonzero) const;

    std::string to_string(value_type a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
    int bits_ = 0;
    std::uint64_t fold_ = 0;
    std::uint64_t mask_ = 0;
};

class RationalField {
public:
    using value_type = BigRational;

    static constexpr std::int64_t kDrawBound = 10000;

    FieldSpec spec(std::uint64_t seed) const { return FieldSpec::rationals(seed); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return v; }
    bool is_zero(const value_type& a) const { return a == 0; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const { return a - f * b; }
    value_type inv(const value_type& a) const;

    /// Integers uniform in [-10^4, 10^4]; nonzero draws avoid 0.
    value_type random(Rng& rng, bool nonzero) const;

    std::string to_string(const value_type& a) const { return a.str(); }
};

/// Calls fn(field) with the concrete field named by the spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.is_prime_field()) return fn(PrimeField(spec.prime));
    return fn(RationalField{});
}

// ---------------------------------------------------------------------------
// Dense matrices over a field

template <class Field>
class DenseMatrix {
public:
    using value_type = typename Field::value_type;

    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const value_type& fill = value_type{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Appends a row; size must equal cols() (or set cols() if the matrix is empty).
    void push_row(std::span<const value_type> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <class Field>
DenseMatrix<Field> zero_matrix(const Field& f, std::size_t rows, std::size_t cols) {
    return DenseMatrix<Field>(rows, cols, f.zero());
}

template <class Field>
DenseMatrix<Field> identity_matrix(const Field& f, std::size_t n) {
    DenseMatrix<Field> m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

template <class Field>
DenseMatrix<Field> transpose(const DenseMatrix<Field>& a) {
    DenseMatrix<Field> t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

template <class Field>
DenseMatrix<Field> multiply(const Field& f, const DenseMatrix<Field>& a, const DenseMatrix<Field>& b) {
    DenseMatrix<Field> out(a.rows(), b.cols(), f.zero());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& s = a(r, k);
            if (f.is_zero(s)) continue;
            auto src = b.row(k);
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!f.is_zero(src[c])) dst[c] = f.add(dst[c], f.mul(s, src[c]));
        }
    }
    return out;
}

/// Row-reduces in place to reduced row echelon form and returns the pivot
/// columns. Rows past the rank are zero afterwards.
template <class Field>
std::vector<std::size_t> rref_in_place(const Field& f, DenseMatrix<Field>& m) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && f.is_zero(m(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(prow, k));
        auto pr = m.row(prow);
        const auto inv = f.inv(pr[c]);
        for (std::size_t k = c; k < cols; ++k)
            if (!f.is_zero(pr[k])) pr[k] = f.mul(pr[k], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow) continue;
            auto rr = m.row(r);
            if (f.is_zero(rr[c])) continue;
            const auto factor = rr[c];
            for (std::size_t k = c; k < cols; ++k)
                if (!f.is_zero(pr[k])) rr[k] = f.sub_mul(rr[k], factor, pr[k]);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

/// Rank by forward elimination (no back substitution).
template <class Field>
std::size_t rank(const Field& f, DenseMatrix<Field> m) {
    std::size_t prow = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && f.is_zero(m(sel, c))) ++sel;
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t k = c; k < cols; ++k) std::swap(m(sel, k), m(prow, k));
        auto pr = m.row(prow);
        const auto inv = f.inv(pr[c]);
        for (std::size_t r = prow + 1; r < rows; ++r) {
            auto rr = m.row(r);
            if (f.is_zero(rr[c])) continue;
            const auto factor = f.mul(rr[c], inv);
            for (std::size_t k = c; k < cols; ++k)
                if (!f.is_zero(pr[k])) rr[k] = f.sub_mul(rr[k], factor, pr[k]);
        }
        ++prow;
    }
    return prow;
}

/// Basis of the right kernel {x : m x = 0}, one basis vector per column.
/// Free variables carry an identity block, so the result has full column rank.
template <class Field>
DenseMatrix<Field> null_space(const Field& f, DenseMatrix<Field> m) {
    const std::size_t cols = m.cols();
    const auto pivots = rref_in_place(f, m);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    const std::size_t nullity = cols - pivots.size();
    DenseMatrix<Field> basis(cols, nullity, f.zero());
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!f.is_zero(m(i, free))) basis(pivots[i], k) = f.neg(m(i, free));
        ++k;
    }
    return basis;
}

/// count x vars matrix of independent draws from the seed, redrawn until it
/// has rank min(count, vars). Throws DegenerateDrawError after kMaxRedraws.
template <class Field>
DenseMatrix<Field> random_linear_forms(const Field& f, std::size_t count, std::size_t vars, std::uint64_t seed,
                                       bool nonzero_entries = false) {
    if (count == 0 || vars == 0) throw ParameterError("random_linear_forms: count and vars must be positive");
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        DenseMatrix<Field> m(count, vars, f.zero());
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < vars; ++c) m(r, c) = f.random(rng, nonzero_entries);
        if (rank(f, m) == std::min(count, vars)) return m;
    }
    throw DegenerateDrawError("random_linear_forms: no full-rank draw after " + std::to_string(kMaxRedraws) +
                              " redraws");
}

// ---------------------------------------------------------------------------
// Sparse integer matrices

struct SparseEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Integer matrix in triplet form; entries are kept sorted, unique, nonzero.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<SparseEntry>& entries() const noexcept { return entries_; }

    std::int64_t at(std::size_t r, std::size_t c) const;
    SparseMatrix transpose() const;

    template <class Field>
    DenseMatrix<Field> to_dense(const Field& f) const {
        DenseMatrix<Field> d(rows_, cols_, f.zero());
        for (const auto& e : entries_) d(e.row, e.col) = f.from_int(e.value);
        return d;
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<SparseEntry> entries_;
};

/// Product of two sparse integer matrices (exact, 64-bit; callers keep entries small).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Exact rank over the field. Prime fields: sparse elimination with columns
/// ordered by ascending fill. Rationals: fraction-free elimination over the
/// integers with content removal.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

}  // namespace lefforge
