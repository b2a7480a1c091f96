#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyface {

/// Set of vertex indices in [0, 64), stored as a bitmask. The bitmask doubles as the
/// canonical key of a face, so equal sets compare and hash equal.
class VertexSet {
public:
    static constexpr int capacity = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    /// {0, ..., n-1}
    static VertexSet range(int n) {
        check_size(n);
        return VertexSet(n == capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    static void check_size(int n) {
        if (n < 0 || n > capacity)
            throw std::length_error("vertex count " + std::to_string(n) + " exceeds " +
                                    std::to_string(capacity));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    void insert(int v) {
        check_index(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(int v) {
        check_index(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

private:
    static void check_index(int v) {
        if (v < 0 || v >= capacity)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }

    std::uint64_t bits_ = 0;
};

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.elements()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace polyface

template <>
struct std::hash<polyface::VertexSet> {
    std::size_t operator()(polyface::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
