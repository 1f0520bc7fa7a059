#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cotan/complex.hpp"
#include "cotan/field.hpp"
#include "cotan/linalg.hpp"

namespace cotan {

// A finite collection of faces ordered by inclusion. The empty face is kept
// as a flag rather than an element; in the order complex it becomes a cone
// apex below everything else.
struct FacePoset {
    std::vector<VertexSet> elements;  // nonempty, distinct, sorted by (size, lex)
    bool contains_empty = false;

    static FacePoset from_faces(const std::vector<VertexSet>& faces) {
        FacePoset p;
        for (VertexSet f : faces) {
            if (f.empty())
                p.contains_empty = true;
            else
                p.elements.push_back(f);
        }
        std::sort(p.elements.begin(), p.elements.end(), SizeLexLess{});
        p.elements.erase(std::unique(p.elements.begin(), p.elements.end()), p.elements.end());
        return p;
    }

    [[nodiscard]] std::size_t size() const {
        return elements.size() + (contains_empty ? 1 : 0);
    }

    [[nodiscard]] bool is_empty() const { return elements.empty() && !contains_empty; }

    [[nodiscard]] bool has_element(VertexSet f) const {
        if (f.empty()) return contains_empty;
        return std::binary_search(elements.begin(), elements.end(), f, SizeLexLess{});
    }
};

// Vertices are poset elements in their sorted order, the apex (if any) last;
// facets are the maximal chains. Only usable while element count + apex fits
// the one-word vertex capacity; the cotangent pipeline avoids this limit by
// working with 2-skeletons of pairs instead (see order_pair_skeleton).
inline SimplicialComplex order_complex(const FacePoset& p) {
    const int m = static_cast<int>(p.elements.size());
    const bool apex = p.contains_empty;
    const int n = m + (apex ? 1 : 0);
    if (n == 0) return SimplicialComplex::void_complex(0);
    if (n > 63) throw std::length_error("order complex exceeds one-word vertex capacity");
    if (m == 0) return SimplicialComplex::from_facets(1, {VertexSet::single(0)});

    std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && p.elements[i].subset_of(p.elements[j])) less[i][j] = 1;

    std::vector<std::vector<int>> covers(m);
    std::vector<char> minimal(m, 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!less[i][j]) continue;
            minimal[j] = 0;
            bool is_cover = true;
            for (int k = 0; k < m && is_cover; ++k)
                if (less[i][k] && less[k][j]) is_cover = false;
            if (is_cover) covers[i].push_back(j);
        }

    std::vector<VertexSet> gens;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> void {
        stack.push_back(v);
        if (covers[v].empty()) {
            VertexSet chain;
            for (int x : stack) chain = chain.with(x);
            if (apex) chain = chain.with(m);
            gens.push_back(chain);
        } else {
            for (int w : covers[v]) self(self, w);
        }
        stack.pop_back();
    };
    for (int i = 0; i < m; ++i)
        if (minimal[i]) dfs(dfs, i);
    return SimplicialComplex::from_facets(n, gens);
}

// sub must be a subcomplex of total on the same ground set.
struct SimplicialPair {
    SimplicialComplex total;
    SimplicialComplex sub;
};

// 2-skeleton of a pair, the only part cohomology through degree 1 sees.
// Vertex ids are dense 0..vert_count-1; edge and triangle index tuples are
// strictly increasing.
struct PairSkeleton {
    int vert_count = 0;
    std::vector<char> vert_in_sub;
    std::vector<std::array<int, 2>> edges;
    std::vector<char> edge_in_sub;
    std::vector<std::array<int, 3>> tris;
    std::vector<char> tri_in_sub;
};

inline PairSkeleton pair_skeleton(const SimplicialPair& pr) {
    const SimplicialComplex& total = pr.total;
    const SimplicialComplex& sub = pr.sub;
    if (sub.n() != total.n()) throw std::invalid_argument("pair ground sets differ");
    for (VertexSet f : sub.facets())
        if (!total.is_face(f)) throw std::invalid_argument("sub is not a subcomplex of total");

    PairSkeleton sk;
    std::vector<int> id(static_cast<std::size_t>(total.n()), -1);
    for (int v : total.vertices()) {
        id[static_cast<std::size_t>(v)] = sk.vert_count++;
        sk.vert_in_sub.push_back(sub.is_face(VertexSet::single(v)) ? 1 : 0);
    }

    std::set<std::uint64_t> edge_masks, tri_masks;
    for (VertexSet f : total.facets()) {
        std::vector<int> fv;
        for (int v : f) fv.push_back(v);
        const int s = static_cast<int>(fv.size());
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) {
                edge_masks.insert(VertexSet{{fv[i], fv[j]}}.bits());
                for (int k = j + 1; k < s; ++k)
                    tri_masks.insert(VertexSet{{fv[i], fv[j], fv[k]}}.bits());
            }
    }
    for (std::uint64_t bits : edge_masks) {
        VertexSet e(bits);
        std::array<int, 2> loc{};
        int t = 0;
        for (int v : e) loc[static_cast<std::size_t>(t++)] = id[static_cast<std::size_t>(v)];
        sk.edges.push_back(loc);
        sk.edge_in_sub.push_back(sub.is_face(e) ? 1 : 0);
    }
    for (std::uint64_t bits : tri_masks) {
        VertexSet tr(bits);
        std::array<int, 3> loc{};
        int t = 0;
        for (int v : tr) loc[static_cast<std::size_t>(t++)] = id[static_cast<std::size_t>(v)];
        sk.tris.push_back(loc);
        sk.tri_in_sub.push_back(sub.is_face(tr) ? 1 : 0);
    }
    return sk;
}

// Skeleton of the order-complex pair of an induced subposet: vertices are
// total's elements in sorted order (apex for the empty face last), edges are
// comparable pairs, triangles are 3-chains. A chain lies in sub's order
// complex exactly when all its members do, so membership flags are per
// vertex and conjunctive.
inline PairSkeleton order_pair_skeleton(const FacePoset& total, const FacePoset& sub) {
    if (sub.contains_empty && !total.contains_empty)
        throw std::invalid_argument("sub poset has the empty face but total does not");
    const int m = static_cast<int>(total.elements.size());
    const bool apex = total.contains_empty;

    PairSkeleton sk;
    sk.vert_count = m + (apex ? 1 : 0);
    sk.vert_in_sub.assign(static_cast<std::size_t>(sk.vert_count), 0);
    for (int i = 0; i < m; ++i) {
        if (sub.has_element(total.elements[static_cast<std::size_t>(i)]))
            sk.vert_in_sub[static_cast<std::size_t>(i)] = 1;
    }
    if (apex && sub.contains_empty) sk.vert_in_sub[static_cast<std::size_t>(m)] = 1;
    int sub_count = 0;
    for (char c : sk.vert_in_sub) sub_count += c;
    if (sub_count != static_cast<int>(sub.size()))
        throw std::invalid_argument("sub poset is not contained in total poset");

    auto in_sub2 = [&](int i, int j) -> char {
        return static_cast<char>(sk.vert_in_sub[static_cast<std::size_t>(i)] &&
                                 sk.vert_in_sub[static_cast<std::size_t>(j)]);
    };

    // (size, lex) order makes every strict inclusion go up in index.
    std::vector<std::vector<int>> down(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < j; ++i)
            if (total.elements[static_cast<std::size_t>(i)].subset_of(
                    total.elements[static_cast<std::size_t>(j)]))
                down[static_cast<std::size_t>(j)].push_back(i);

    for (int j = 0; j < m; ++j)
        for (int i : down[static_cast<std::size_t>(j)]) {
            sk.edges.push_back({i, j});
            sk.edge_in_sub.push_back(in_sub2(i, j));
        }
    if (apex)
        for (int i = 0; i < m; ++i) {
            sk.edges.push_back({i, m});
            sk.edge_in_sub.push_back(in_sub2(i, m));
        }

    for (int k = 0; k < m; ++k)
        for (int j : down[static_cast<std::size_t>(k)])
            for (int i : down[static_cast<std::size_t>(j)]) {
                sk.tris.push_back({i, j, k});
                sk.tri_in_sub.push_back(
                    static_cast<char>(in_sub2(i, j) && sk.vert_in_sub[static_cast<std::size_t>(k)]));
            }
    if (apex)
        for (int j = 0; j < m; ++j)
            for (int i : down[static_cast<std::size_t>(j)]) {
                sk.tris.push_back({i, j, m});
                sk.tri_in_sub.push_back(
                    static_cast<char>(in_sub2(i, j) && sk.vert_in_sub[static_cast<std::size_t>(m)]));
            }
    return sk;
}

struct CohomologyDims {
    long long h0 = 0;
    long long h1 = 0;

    bool operator==(const CohomologyDims&) const = default;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline std::int64_t edge_key(int u, int v) {
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Coboundary sign convention: on an index-increasing edge (i,j) the degree-0
// map takes f to f(j)-f(i); on a triangle (i,j,k) the degree-1 map takes g to
// g(jk)-g(ik)+g(ij).
template <class F>
long long d1_rank(const F& f, const PairSkeleton& sk, bool relative) {
    std::unordered_map<std::int64_t, int> col;
    int ecount = 0;
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        if (relative && sk.edge_in_sub[e]) continue;
        col[edge_key(sk.edges[e][0], sk.edges[e][1])] = ecount++;
    }
    IntMat d1;
    d1.cols = ecount;
    for (std::size_t t = 0; t < sk.tris.size(); ++t) {
        if (relative && sk.tri_in_sub[t]) continue;
        const auto [i, j, k] = sk.tris[t];
        const int row = d1.rows++;
        const std::array<std::pair<std::int64_t, int>, 3> terms{
            std::pair{edge_key(j, k), 1}, std::pair{edge_key(i, k), -1},
            std::pair{edge_key(i, j), 1}};
        for (const auto& [key, sign] : terms) {
            auto it = col.find(key);
            if (it != col.end()) d1.add(row, it->second, sign);
        }
    }
    return linalg::rank(f, d1);
}

}  // namespace detail

// Dimensions of H^0 and H^1 of the quotient of total by sub. With sub empty
// this is absolute cohomology; `reduced` only changes that case (and lowers
// h0 by one when total is nonempty). H^0 of the quotient counts components
// of (vertices, non-sub edges) that avoid sub; H^1 comes from
// dim ker d1 - dim im d0 on relative cochains.
inline CohomologyDims skeleton_relative_dims(const PairSkeleton& sk, FieldChoice field,
                                             bool reduced = false) {
    const int V = sk.vert_count;
    if (V == 0) return {0, 0};

    detail::UnionFind uf(V);
    long long e_rel = 0;
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        if (sk.edge_in_sub[e]) continue;
        ++e_rel;
        uf.unite(sk.edges[e][0], sk.edges[e][1]);
    }
    std::vector<char> root_has_sub(static_cast<std::size_t>(V), 0);
    std::vector<char> root_seen(static_cast<std::size_t>(V), 0);
    long long v_rel = 0;
    bool sub_empty = true;
    for (int v = 0; v < V; ++v) {
        const int r = uf.find(v);
        root_seen[static_cast<std::size_t>(r)] = 1;
        if (sk.vert_in_sub[static_cast<std::size_t>(v)]) {
            root_has_sub[static_cast<std::size_t>(r)] = 1;
            sub_empty = false;
        } else {
            ++v_rel;
        }
    }
    long long h0 = 0;
    for (int r = 0; r < V; ++r)
        if (root_seen[static_cast<std::size_t>(r)] && !root_has_sub[static_cast<std::size_t>(r)])
            ++h0;

    const long long rank_d1 = with_field_arith(
        field, [&](auto f) { return detail::d1_rank(f, sk, /*relative=*/true); });
    const long long h1 = (e_rel - rank_d1) - (v_rel - h0);

    CohomologyDims out{h0, h1};
    if (reduced && sub_empty) out.h0 -= 1;  // V > 0 guarantees h0 >= 1 here
    return out;
}

inline CohomologyDims cohomology_dims(const SimplicialComplex& x, FieldChoice field,
                                      bool reduced = false) {
    return skeleton_relative_dims(
        pair_skeleton({x, SimplicialComplex::void_complex(x.n())}), field, reduced);
}

inline CohomologyDims relative_cohomology_dims(const SimplicialPair& pr, FieldChoice field,
                                               bool reduced = false) {
    return skeleton_relative_dims(pair_skeleton(pr), field, reduced);
}

// Absolute dimensions on both sides of a pair plus the ranks of the
// restriction maps H^i(total) -> H^i(sub). Rank in degree 0 counts total
// components meeting sub; rank in degree 1 is the dimension of the image of
// restricted 1-cocycles modulo sub coboundaries.
struct InducedHMaps {
    long long h0_total = 0;
    long long h1_total = 0;
    long long h0_sub = 0;
    long long h1_sub = 0;
    long long rank_h0 = 0;
    long long rank_h1 = 0;
};

inline InducedHMaps induced_h_maps(const PairSkeleton& sk, FieldChoice field) {
    InducedHMaps out;
    const int V = sk.vert_count;
    if (V == 0) return out;

    detail::UnionFind uft(V);
    for (const auto& e : sk.edges) uft.unite(e[0], e[1]);
    std::vector<char> seen(static_cast<std::size_t>(V), 0), meets_sub(static_cast<std::size_t>(V), 0);
    for (int v = 0; v < V; ++v) {
        const int r = uft.find(v);
        seen[static_cast<std::size_t>(r)] = 1;
        if (sk.vert_in_sub[static_cast<std::size_t>(v)]) meets_sub[static_cast<std::size_t>(r)] = 1;
    }
    for (int r = 0; r < V; ++r) {
        out.h0_total += seen[static_cast<std::size_t>(r)];
        out.rank_h0 += meets_sub[static_cast<std::size_t>(r)];
    }

    detail::UnionFind ufs(V);
    for (std::size_t e = 0; e < sk.edges.size(); ++e)
        if (sk.edge_in_sub[e]) ufs.unite(sk.edges[e][0], sk.edges[e][1]);
    std::set<int> sub_roots;
    long long v_sub = 0;
    for (int v = 0; v < V; ++v)
        if (sk.vert_in_sub[static_cast<std::size_t>(v)]) {
            ++v_sub;
            sub_roots.insert(ufs.find(v));
        }
    out.h0_sub = static_cast<long long>(sub_roots.size());

    std::unordered_map<std::int64_t, int> all_col, sub_col;
    int e_all = 0, e_sub = 0;
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        const auto key = detail::edge_key(sk.edges[e][0], sk.edges[e][1]);
        all_col[key] = e_all++;
        if (sk.edge_in_sub[e]) sub_col[key] = e_sub++;
    }

    IntMat d1_total, d1_sub;
    d1_total.cols = e_all;
    d1_sub.cols = e_sub;
    for (std::size_t t = 0; t < sk.tris.size(); ++t) {
        const auto [i, j, k] = sk.tris[t];
        const std::array<std::pair<std::int64_t, int>, 3> terms{
            std::pair{detail::edge_key(j, k), 1}, std::pair{detail::edge_key(i, k), -1},
            std::pair{detail::edge_key(i, j), 1}};
        const int row = d1_total.rows++;
        for (const auto& [key, sign] : terms) d1_total.add(row, all_col.at(key), sign);
        if (sk.tri_in_sub[t]) {
            const int srow = d1_sub.rows++;
            for (const auto& [key, sign] : terms) d1_sub.add(srow, sub_col.at(key), sign);
        }
    }

    return with_field_arith(field, [&](auto f) {
        InducedHMaps r = out;
        const long long rk_total = linalg::rank(f, d1_total);
        const long long rk_sub = linalg::rank(f, d1_sub);
        r.h1_total = (e_all - rk_total) - (V - r.h0_total);
        r.h1_sub = (e_sub - rk_sub) - (v_sub - r.h0_sub);

        using Elem = typename decltype(f)::Elem;
        const auto kernel = linalg::kernel_basis(f, d1_total);
        std::vector<std::vector<Elem>> restricted;
        restricted.reserve(kernel.size());
        for (const auto& z : kernel) {
            std::vector<Elem> zr(static_cast<std::size_t>(e_sub), f.zero());
            for (std::size_t e = 0; e < sk.edges.size(); ++e) {
                if (!sk.edge_in_sub[e]) continue;
                const auto key = detail::edge_key(sk.edges[e][0], sk.edges[e][1]);
                zr[static_cast<std::size_t>(sub_col.at(key))] =
                    z[static_cast<std::size_t>(all_col.at(key))];
            }
            restricted.push_back(std::move(zr));
        }
        std::vector<std::vector<Elem>> sub_coboundaries;
        for (int v = 0; v < V; ++v) {
            if (!sk.vert_in_sub[static_cast<std::size_t>(v)]) continue;
            std::vector<Elem> c(static_cast<std::size_t>(e_sub), f.zero());
            for (std::size_t e = 0; e < sk.edges.size(); ++e) {
                if (!sk.edge_in_sub[e]) continue;
                const auto key = detail::edge_key(sk.edges[e][0], sk.edges[e][1]);
                if (sk.edges[e][1] == v)
                    c[static_cast<std::size_t>(sub_col.at(key))] = f.one();
                else if (sk.edges[e][0] == v)
                    c[static_cast<std::size_t>(sub_col.at(key))] = f.neg(f.one());
            }
            sub_coboundaries.push_back(std::move(c));
        }
        r.rank_h1 = linalg::rank_modulo(f, e_sub, restricted, sub_coboundaries);
        return r;
    });
}

inline InducedHMaps induced_h_maps(const SimplicialPair& pr, FieldChoice field) {
    return induced_h_maps(pair_skeleton(pr), field);
}

}  // namespace cotan
