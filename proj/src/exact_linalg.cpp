#include "lefforge/exact_linalg.hpp"

#include <limits>
#include <map>
#include <numeric>

namespace lefforge {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for every n < 2^64.
    for (auto a : small) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw ParameterError("determinant: matrix is not square");
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

FieldSpec FieldSpec::prime_field(std::uint64_t p, std::uint64_t seed) {
    if (p >= (std::uint64_t{1} << 63) || !is_prime(p))
        throw ParameterError("field: " + std::to_string(p) + " is not a prime below 2^63");
    FieldSpec f;
    f.kind = Kind::prime;
    f.prime = p;
    f.seed = seed;
    return f;
}

FieldSpec FieldSpec::rationals(std::uint64_t seed) {
    FieldSpec f;
    f.kind = Kind::rational;
    f.prime = 0;
    f.seed = seed;
    return f;
}

std::string FieldSpec::describe() const {
    return is_prime_field() ? "GF(" + std::to_string(prime) + ")" : std::string("QQ");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ParameterError("Rng::below: bound must be positive");
    // Reject the low 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::int64_t Rng::in_range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 63)) throw ParameterError("PrimeField: modulus out of range");
    bits_ = std::bit_width(p);
    const u128 pow2 = static_cast<u128>(1) << bits_;
    const auto fold = static_cast<std::uint64_t>(pow2 - p);
    if (bits_ >= 42 && fold < (std::uint64_t{1} << 20)) {
        fold_ = fold;
        mask_ = static_cast<std::uint64_t>(pow2 - 1);
    }
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const noexcept {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
    // -(v+1) avoids overflow at INT64_MIN.
    const std::uint64_t mag = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
    return mag == 0 ? 0 : p_ - mag;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    __int128 r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (s0 < 0) s0 += p_;
    return static_cast<value_type>(s0);
}

PrimeField::value_type PrimeField::random(Rng& rng, bool nonzero) const {
    return nonzero ? 1 + rng.below(p_ - 1) : rng.below(p_);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField::inv: zero has no inverse");
    return 1 / a;
}

RationalField::value_type RationalField::random(Rng& rng, bool nonzero) const {
    for (;;) {
        auto v = rng.in_range(-kDrawBound, kDrawBound);
        if (!nonzero || v != 0) return v;
    }
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries)
    : rows_(rows), cols_(cols) {
    std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols) throw ParameterError("SparseMatrix: entry index out of range");
        if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
            entries_.back().value += e.value;
        else
            entries_.push_back(e);
    }
    std::erase_if(entries_, [](const SparseEntry& e) { return e.value == 0; });
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const SparseEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                               });
    return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<SparseEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw ParameterError("multiply: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> brows(b.rows());
    for (const auto& e : b.entries()) brows[e.row].emplace_back(e.col, e.value);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
    for (const auto& e : a.entries())
        for (auto [c, v] : brows[e.col]) acc[{e.row, c}] += e.value * v;
    std::vector<SparseEntry> out;
    for (const auto& [key, v] : acc)
        if (v != 0) out.push_back({key.first, key.second, v});
    return SparseMatrix(a.rows(), b.cols(), std::move(out));
}

namespace {

// Columns relabelled so the sparsest come first; returns old -> new.
std::vector<std::uint32_t> sparsity_order(const SparseMatrix& m) {
    std::vector<std::size_t> count(m.cols(), 0);
    for (const auto& e : m.entries()) ++count[e.col];
    std::vector<std::uint32_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
    std::vector<std::uint32_t> relabel(m.cols());
    for (std::uint32_t i = 0; i < order.size(); ++i) relabel[order[i]] = i;
    return relabel;
}

template <class T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
std::vector<SparseRow<T>> split_rows(const SparseMatrix& m, const std::vector<std::uint32_t>& relabel,
                                     auto&& convert) {
    std::vector<SparseRow<T>> rows(m.rows());
    for (const auto& e : m.entries()) rows[e.row].emplace_back(relabel[e.col], convert(e.value));
    for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(rows, [](const SparseRow<T>& r) { return r.empty(); });
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return rows;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    const PrimeField f(p);
    const auto relabel = sparsity_order(m);
    auto rows = split_rows<std::uint64_t>(m, relabel, [&](std::int64_t v) { return f.from_int(v); });
    std::vector<std::int64_t> pivot_of(m.cols(), -1);
    std::vector<SparseRow<std::uint64_t>> pivots;
    SparseRow<std::uint64_t> scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            const auto lead = row.front().first;
            if (pivot_of[lead] < 0) {
                const auto inv = f.inv(row.front().second);
                for (auto& [c, v] : row) v = f.mul(v, inv);
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            const auto factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, k = 0;
            while (i < row.size() || k < piv.size()) {
                if (k == piv.size() || (i < row.size() && row[i].first < piv[k].first)) {
                    scratch.push_back(row[i++]);
                } else if (i == row.size() || piv[k].first < row[i].first) {
                    scratch.emplace_back(piv[k].first, f.neg(f.mul(factor, piv[k].second)));
                    ++k;
                } else {
                    auto v = f.sub_mul(row[i].second, factor, piv[k].second);
                    if (v != 0) scratch.emplace_back(row[i].first, v);
                    ++i;
                    ++k;
                }
            }
            std::swap(row, scratch);
        }
    }
    return pivots.size();
}

std::size_t rank_rational(const SparseMatrix& m) {
    const auto relabel = sparsity_order(m);
    auto rows = split_rows<BigInt>(m, relabel, [](std::int64_t v) { return BigInt(v); });
    std::vector<std::int64_t> pivot_of(m.cols(), -1);
    std::vector<SparseRow<BigInt>> pivots;
    SparseRow<BigInt> scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            const auto lead = row.front().first;
            if (pivot_of[lead] < 0) {
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            // row <- a*row - b*piv with a, b the leading entries over their gcd.
            const BigInt g = boost::multiprecision::gcd(piv.front().second, row.front().second);
            const BigInt a = piv.front().second / g;
            const BigInt b = row.front().second / g;
            scratch.clear();
            std::size_t i = 0, k = 0;
            while (i < row.size() || k < piv.size()) {
                if (k == piv.size() || (i < row.size() && row[i].first < piv[k].first)) {
                    scratch.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || piv[k].first < row[i].first) {
                    scratch.emplace_back(piv[k].first, -b * piv[k].second);
                    ++k;
                } else {
                    BigInt v = a * row[i].second - b * piv[k].second;
                    if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++k;
                }
            }
            if (!scratch.empty()) {
                BigInt content = 0;
                for (const auto& [c, v] : scratch) {
                    content = boost::multiprecision::gcd(content, v);
                    if (content == 1) break;
                }
                if (content > 1)
                    for (auto& [c, v] : scratch) v /= content;
            }
            std::swap(row, scratch);
        }
    }
    return pivots.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
    if (m.entries().empty()) return 0;
    return field.is_prime_field() ? rank_mod_p(m, field.prime) : rank_rational(m);
}

}  // namespace lefforge
