#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tcrit/errors.hpp"

namespace tcrit {

/// Subset of {0..63} as a one-word bit-vector. Bit v set = vertex v present.
/// Value type; all set algebra is word-at-a-time.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << check(v)); }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet full(int n) {
        if (n < 0 || n > 64) throw OutOfRange("VertexSet::full: n out of range");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> check(v)) & 1; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    void add(int v) { bits_ |= std::uint64_t{1} << check(v); }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << check(v)); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << check(v))); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << check(v))); }

    /// Smallest member; set must be nonempty.
    constexpr int lowest() const {
        if (bits_ == 0) throw OutOfRange("VertexSet::lowest on empty set");
        return std::countr_zero(bits_);
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    /// Iterates members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr int check(int v) {
        if (v < 0 || v >= 64) throw OutOfRange("vertex index out of range");
        return v;
    }

    std::uint64_t bits_ = 0;
};

}  // namespace tcrit
