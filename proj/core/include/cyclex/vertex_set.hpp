#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace cyclex {

/// Hard upper bound on the number of vertices: one adjacency row per machine word.
inline constexpr int kMaxVertices = 64;

/// A set of vertices in 0..63 stored as a single 64-bit word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members) {
        for (int v : members) insert(v);
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    std::string to_string() const;

    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return a ^= b; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order: lexicographic comparison of the sorted member lists,
/// so {0,5} < {1,2} and {0} < {0,1}.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const std::uint64_t above = d == 63 ? 0 : ~((std::uint64_t{1} << (d + 1)) - 1);
    if (a.contains(d)) {
        // a has d where b does not; b is smaller only if it ended before d.
        return (b.bits() & above) != 0;
    }
    return (a.bits() & above) == 0;
}

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace cyclex
