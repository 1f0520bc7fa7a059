#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotan/complex.hpp"

namespace cotan {
namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x517cc1b727220a95ull + (h << 6) + (h >> 2)));
}

// Stable vertex invariants, refined until the induced partition stops
// splitting. Invariant under relabeling: built purely from multisets of
// facet sizes and previously computed colors.
inline std::vector<std::uint64_t> vertex_colors(const SimplicialComplex& c) {
    int n = c.n();
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> sizes;
        for (VertexSet f : c.facets())
            if (f.contains(v)) sizes.push_back(static_cast<std::uint64_t>(f.size()));
        std::sort(sizes.begin(), sizes.end());
        std::uint64_t h = combine(0, sizes.size());
        for (std::uint64_t s : sizes) h = combine(h, s);
        color[static_cast<std::size_t>(v)] = h;
    }
    auto distinct = [&] {
        auto s = color;
        std::sort(s.begin(), s.end());
        return std::unique(s.begin(), s.end()) - s.begin();
    };
    auto prev = distinct();
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> sigs;
            for (VertexSet f : c.facets()) {
                if (!f.contains(v)) continue;
                std::vector<std::uint64_t> others;
                for (int w : f)
                    if (w != v) others.push_back(color[static_cast<std::size_t>(w)]);
                std::sort(others.begin(), others.end());
                std::uint64_t h = combine(1, static_cast<std::uint64_t>(f.size()));
                for (std::uint64_t o : others) h = combine(h, o);
                sigs.push_back(h);
            }
            std::sort(sigs.begin(), sigs.end());
            std::uint64_t h = combine(2, color[static_cast<std::size_t>(v)]);
            for (std::uint64_t s : sigs) h = combine(h, s);
            next[static_cast<std::size_t>(v)] = h;
        }
        color = std::move(next);
        auto cur = distinct();
        if (cur == prev) break;
        prev = cur;
    }
    return color;
}

inline std::vector<std::uint64_t> encode_facets(const std::vector<VertexSet>& facets,
                                                const std::vector<int>& perm) {
    std::vector<std::uint64_t> enc;
    enc.reserve(facets.size());
    for (VertexSet f : facets) enc.push_back(relabel(f, perm).bits());
    std::sort(enc.begin(), enc.end());
    return enc;
}

}  // namespace detail

// Lexicographically minimal facet encoding over all relabelings, restricted
// to permutations compatible with the refined vertex invariants. Capped at
// n <= 10; the search is the product of factorials of the invariant cells.
inline SimplicialComplex canonical_representative(const SimplicialComplex& c) {
    if (c.n() > 10) throw std::invalid_argument("canonical form capped at n <= 10");
    if (c.is_void()) return c;

    int n = c.n();
    auto color = detail::vertex_colors(c);

    // Cells ordered by (size, color value); both are relabeling-invariant,
    // so the position blocks agree for isomorphic inputs.
    std::vector<std::uint64_t> palette = color;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<std::vector<int>> cells;
    for (std::uint64_t col : palette) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[static_cast<std::size_t>(v)] == col) cell.push_back(v);
        cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return color[static_cast<std::size_t>(a.front())] < color[static_cast<std::size_t>(b.front())];
    });

    std::vector<int> block_start(cells.size());
    int pos = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        block_start[i] = pos;
        pos += static_cast<int>(cells[i].size());
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> best;
    bool have_best = false;

    auto search = [&](auto&& self, std::size_t cell_idx) -> void {
        if (cell_idx == cells.size()) {
            auto enc = detail::encode_facets(c.facets(), perm);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        std::vector<int> cell = cells[cell_idx];
        do {
            for (std::size_t i = 0; i < cell.size(); ++i)
                perm[static_cast<std::size_t>(cell[i])] = block_start[cell_idx] + static_cast<int>(i);
            self(self, cell_idx + 1);
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    search(search, 0);

    std::vector<VertexSet> fs;
    for (std::uint64_t b : best) fs.push_back(VertexSet(b));
    return SimplicialComplex::from_facets(n, fs);
}

inline std::string canonical_form(const SimplicialComplex& c) {
    std::string s = "n=" + std::to_string(c.n()) + ";";
    if (c.is_void()) return s + "void";
    SimplicialComplex rep = canonical_representative(c);
    bool first = true;
    for (VertexSet f : rep.facets()) {
        if (!first) s += ",";
        first = false;
        if (f.empty()) {
            s += "-";
            continue;
        }
        for (int v : f) s += static_cast<char>('0' + v);
    }
    return s;
}

}  // namespace cotan
