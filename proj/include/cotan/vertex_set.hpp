#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>

namespace cotan {

// Subset of {0, ..., 63} packed into one machine word. Ground sets in this
// library have n <= 63; order complexes may use index 63 internally, so the
// type itself accepts the full word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

    // {0, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }

    [[nodiscard]] constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    [[nodiscard]] constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
    [[nodiscard]] constexpr VertexSet unite(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    [[nodiscard]] constexpr VertexSet intersect(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    [[nodiscard]] constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    [[nodiscard]] constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    [[nodiscard]] int min_element() const {
        if (empty()) throw std::logic_error("min_element of empty VertexSet");
        return std::countr_zero(bits_);
    }
    [[nodiscard]] int max_element() const {
        if (empty()) throw std::logic_error("max_element of empty VertexSet");
        return 63 - std::countl_zero(bits_);
    }

    constexpr bool operator==(const VertexSet&) const = default;

    // Lexicographic order on the ascending element sequences: the set owning
    // the smallest element of the symmetric difference comes first.
    // {0,3} < {1,2}, {1} < {1,2}.
    [[nodiscard]] bool lex_less(VertexSet o) const {
        std::uint64_t d = bits_ ^ o.bits_;
        if (d == 0) return false;
        return (bits_ & (d & ~(d - 1))) != 0;
    }

    // Reverse-lexicographic order used by the matroid database encoding:
    // compare by the largest differing element; the set not containing it
    // comes first. For 2-subsets of {0..3}: 01, 02, 12, 03, 13, 23.
    [[nodiscard]] bool revlex_less(VertexSet o) const {
        std::uint64_t d = bits_ ^ o.bits_;
        if (d == 0) return false;
        int top = 63 - std::countl_zero(d);
        return !contains(top);
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };
    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    static constexpr std::uint64_t bit(int v) { return 1ull << v; }

    std::uint64_t bits_ = 0;
};

// Total order by (cardinality, then lex). This is the order used everywhere a
// deterministic face ordering is needed (poset element indexing, witness
// scans, report rows).
struct SizeLexLess {
    bool operator()(VertexSet a, VertexSet b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.lex_less(b);
    }
};

// Applies a relabeling to a set: element v becomes perm[v].
template <class Perm>
VertexSet relabel(VertexSet s, const Perm& perm) {
    VertexSet out;
    for (int v : s) out = out.with(perm[v]);
    return out;
}

// Iterates all subsets of `mask`, including the empty set and mask itself,
// in increasing numeric (bitmask) order of the packed word.
template <class Fn>
void for_each_subset(VertexSet mask, Fn&& fn) {
    std::uint64_t m = mask.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(VertexSet(s));
        if (s == m) break;
        s = (s - m) & m;
    }
}

}  // namespace cotan
