#pragma once
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace nicx {

// A face of a simplicial complex: subset of a universe of at most 64 points.
using Face = std::uint64_t;

inline int popcount(Face f) { return std::popcount(f); }
inline int lowest_bit(Face f) { return std::countr_zero(f); }

template <typename Fn>
inline void for_each_bit(Face f, Fn&& fn) {
    while (f) {
        fn(std::countr_zero(f));
        f &= f - 1;
    }
}

inline std::vector<int> bits_of(Face f) {
    std::vector<int> out;
    for_each_bit(f, [&](int b) { out.push_back(b); });
    return out;
}

// Next subset of the same cardinality in increasing numeric order
// (Gosper's hack); numeric order on masks is colexicographic order on subsets.
inline Face next_same_popcount(Face v) {
    Face c = v & (~v + 1);
    Face r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// 128-bit set, used for edge sets of graphs/hypergraphs whose universe can
// exceed 64 (e.g. all vertex pairs for n up to 16).
struct Bits128 {
    std::uint64_t lo = 0, hi = 0;

    static Bits128 single(int i) {
        Bits128 b;
        b.set(i);
        return b;
    }
    bool test(int i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }
    void set(int i) {
        if (i < 64) lo |= (std::uint64_t{1} << i);
        else hi |= (std::uint64_t{1} << (i - 64));
    }
    void reset(int i) {
        if (i < 64) lo &= ~(std::uint64_t{1} << i);
        else hi &= ~(std::uint64_t{1} << (i - 64));
    }
    void flip(int i) {
        if (i < 64) lo ^= (std::uint64_t{1} << i);
        else hi ^= (std::uint64_t{1} << (i - 64));
    }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool any() const { return lo || hi; }
    bool none() const { return !any(); }

    friend Bits128 operator|(Bits128 a, Bits128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend Bits128 operator^(Bits128 a, Bits128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    Bits128& operator|=(Bits128 b) { lo |= b.lo; hi |= b.hi; return *this; }
    Bits128& operator&=(Bits128 b) { lo &= b.lo; hi &= b.hi; return *this; }
    Bits128& operator^=(Bits128 b) { lo ^= b.lo; hi ^= b.hi; return *this; }
    Bits128 and_not(Bits128 b) const { return {lo & ~b.lo, hi & ~b.hi}; }
    bool subset_of(Bits128 b) const { return (lo & ~b.lo) == 0 && (hi & ~b.hi) == 0; }

    bool operator==(const Bits128&) const = default;
    // numeric order of the 128-bit value
    friend bool operator<(const Bits128& a, const Bits128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for_each_bit(lo, fn);
        std::uint64_t h = hi;
        while (h) {
            fn(64 + std::countr_zero(h));
            h &= h - 1;
        }
    }
    std::vector<int> bits() const {
        std::vector<int> out;
        for_each([&](int b) { out.push_back(b); });
        return out;
    }
};

} // namespace nicx
