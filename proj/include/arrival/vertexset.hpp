#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace arrival {

// Vertex subset as a bitmask; bit position = vertex index. Graphs are capped
// at 30 vertices so one 32-bit word always suffices.
struct VertexSet {
    std::uint32_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t b) : bits(b) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.bits |= std::uint32_t{1} << v;
        return s;
    }

    constexpr bool test(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool contains(VertexSet other) const { return (other.bits & ~bits) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

    constexpr VertexSet with(int v) const { return VertexSet(bits | (std::uint32_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits & ~(std::uint32_t{1} << v)); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

template <class F>
void for_each_vertex(VertexSet s, F&& f) {
    for (std::uint32_t b = s.bits; b != 0; b &= b - 1) f(std::countr_zero(b));
}

// Visits every submask of s, the full mask first and the empty mask last.
template <class F>
void for_each_subset(VertexSet s, F&& f) {
    std::uint32_t sub = s.bits;
    while (true) {
        f(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & s.bits;
    }
}

}  // namespace arrival
