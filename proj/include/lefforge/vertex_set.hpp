#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace lefforge {

/// Bitset over at most 256 vertices. Ordering compares the sorted member
/// lists lexicographically, so {0,5} < {1} and {0} < {0,1}.
class VertexSet {
public:
    static constexpr std::size_t kCapacity = 256;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<std::size_t> members) {
        for (auto v : members) insert(v);
    }
    static VertexSet from_members(const std::vector<std::size_t>& members) {
        VertexSet s;
        for (auto v : members) s.insert(v);
        return s;
    }
    /// {0, ..., count-1}
    static VertexSet prefix(std::size_t count) {
        VertexSet s;
        for (std::size_t w = 0; w < kWords && count > 0; ++w) {
            s.bits_[w] = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
            count = count >= 64 ? count - 64 : 0;
        }
        return s;
    }

    void insert(std::size_t v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(std::size_t v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (bits_[w] & o.bits_[w]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t w = 0; w < kWords; ++w) r.bits_[w] = bits_[w] | o.bits_[w];
        return r;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t w = 0; w < kWords; ++w) r.bits_[w] = bits_[w] & o.bits_[w];
        return r;
    }
    /// Set difference.
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (std::size_t w = 0; w < kWords; ++w) r.bits_[w] = bits_[w] & ~o.bits_[w];
        return r;
    }

    /// Smallest member; undefined on the empty set.
    std::size_t min() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (bits_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
        return kCapacity;
    }
    /// Largest member + 1, or 0 when empty.
    std::size_t bound() const {
        for (std::size_t w = kWords; w-- > 0;)
            if (bits_[w]) return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(bits_[w]));
        return 0;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t x = bits_[w];
            while (x) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    const std::array<std::uint64_t, 4>& words() const { return bits_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        // Lexicographic on member lists: find the first vertex in the symmetric
        // difference; the set holding it is smaller unless the other set ran out.
        for (std::size_t w = 0; w < kWords; ++w) {
            const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
            if (!diff) continue;
            const auto bit = std::countr_zero(diff);
            const bool in_a = (a.bits_[w] >> bit) & 1;
            const VertexSet& other = in_a ? b : a;
            // Does `other` have any member beyond this position?
            bool other_continues = false;
            const std::uint64_t above = bit == 63 ? 0 : other.bits_[w] >> (bit + 1);
            if (above) other_continues = true;
            for (std::size_t v = w + 1; v < kWords && !other_continues; ++v)
                if (other.bits_[v]) other_continues = true;
            if (!other_continues) return in_a ? std::strong_ordering::greater : std::strong_ordering::less;
            return in_a ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    static constexpr std::size_t kWords = 4;
    std::array<std::uint64_t, kWords> bits_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : s.words()) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace lefforge
