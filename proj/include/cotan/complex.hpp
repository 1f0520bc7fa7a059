#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotan/vertex_set.hpp"

namespace cotan {

// Abstract simplicial complex on ground set {0,...,n-1}, stored as the
// antichain of facets, sorted by (cardinality, lex). Two special values:
//   - the void complex (no faces at all): facets empty, void_flag set;
//   - the complex {emptyset}: a single empty facet.
// Ground-set elements that lie in no face are loops of the Stanley-Reisner
// ring; they are representable simply by never appearing in a facet.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int n) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        c.void_ = true;
        return c;
    }

    // The complex whose only face is the empty set.
    static SimplicialComplex empty_face_only(int n) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        c.facets_ = {VertexSet{}};
        return c;
    }

    static SimplicialComplex full_simplex(int n) {
        return from_facets(n, {VertexSet::full(n)});
    }

    // Faces of dimension <= 0 only: every listed vertex, nothing else.
    static SimplicialComplex points(int n, VertexSet vs) {
        std::vector<VertexSet> fs;
        for (int v : vs) fs.push_back(VertexSet::single(v));
        if (fs.empty()) return empty_face_only(n);
        return from_facets(n, fs);
    }

    // Reduces an arbitrary generating family to the facet antichain. An empty
    // family yields the void complex; {emptyset} yields the empty-face-only
    // complex.
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> gens) {
        SimplicialComplex c;
        c.n_ = check_n(n);
        for (VertexSet g : gens) {
            if (!g.subset_of(VertexSet::full(n)))
                throw std::invalid_argument("facet exceeds ground set");
        }
        std::sort(gens.begin(), gens.end(),
                  [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
                if (i != j && gens[i].subset_of(gens[j]) && gens[i] != gens[j]) dominated = true;
            if (!dominated) c.facets_.push_back(gens[i]);
        }
        std::sort(c.facets_.begin(), c.facets_.end(), SizeLexLess{});
        c.void_ = c.facets_.empty();
        return c;
    }

    static SimplicialComplex from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<VertexSet> fs;
        for (int v = 0; v < n; ++v) fs.push_back(VertexSet::single(v));
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("edge endpoints must differ");
            fs.push_back(VertexSet{u, v});
        }
        return from_facets(n, fs);
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool is_void() const { return void_; }
    [[nodiscard]] const std::vector<VertexSet>& facets() const { return facets_; }

    // dim(void) = -2 by convention here (stands in for "minus infinity"),
    // dim({emptyset}) = -1.
    [[nodiscard]] int dimension() const {
        if (void_) return -2;
        int d = -1;
        for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
        return d;
    }

    [[nodiscard]] bool is_face(VertexSet f) const {
        if (void_) return false;
        for (VertexSet g : facets_)
            if (f.subset_of(g)) return true;
        return false;
    }

    // Elements v with {v} a face.
    [[nodiscard]] VertexSet vertices() const {
        VertexSet vs;
        for (VertexSet f : facets_) vs = vs.unite(f);
        return vs;
    }

    [[nodiscard]] VertexSet loops() const { return VertexSet::full(n_).minus(vertices()); }

    // All faces, sorted by (cardinality, lex); empty for the void complex.
    [[nodiscard]] std::vector<VertexSet> faces() const {
        std::vector<VertexSet> out;
        if (void_) return out;
        for (VertexSet f : facets_)
            for_each_subset(f, [&](VertexSet s) { out.push_back(s); });
        std::sort(out.begin(), out.end(),
                  [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::sort(out.begin(), out.end(), SizeLexLess{});
        return out;
    }

    [[nodiscard]] std::size_t face_count() const { return faces().size(); }

    // link(A) = { F : F disjoint from A, F union A a face }, on the same
    // ground set; vertices outside the link become loops of the result.
    [[nodiscard]] SimplicialComplex link(VertexSet a) const {
        if (!is_face(a)) throw std::invalid_argument("link of a non-face");
        std::vector<VertexSet> gens;
        for (VertexSet f : facets_)
            if (a.subset_of(f)) gens.push_back(f.minus(a));
        return from_facets(n_, gens);
    }

    // star(A) = { F : F union A a face }; its facets are the facets
    // containing A.
    [[nodiscard]] SimplicialComplex star(VertexSet a) const {
        if (!is_face(a)) throw std::invalid_argument("star of a non-face");
        std::vector<VertexSet> gens;
        for (VertexSet f : facets_)
            if (a.subset_of(f)) gens.push_back(f);
        return from_facets(n_, gens);
    }

    // Faces contained in `keep`; same ground set, so everything outside
    // `keep` becomes a loop.
    [[nodiscard]] SimplicialComplex restriction(VertexSet keep) const {
        if (void_) return void_complex(n_);
        std::vector<VertexSet> gens;
        for (VertexSet f : facets_) gens.push_back(f.intersect(keep));
        return from_facets(n_, gens);
    }

    // Deletion of the elements of `w`.
    [[nodiscard]] SimplicialComplex deletion(VertexSet w) const {
        return restriction(VertexSet::full(n_).minus(w));
    }

    // Join: ground sets concatenated, the right factor shifted by n(). Both
    // factors must be non-void.
    [[nodiscard]] SimplicialComplex join(const SimplicialComplex& right) const {
        if (void_ || right.void_) throw std::invalid_argument("join with a void complex");
        if (n_ + right.n_ > 63) throw std::invalid_argument("join exceeds ground-set capacity");
        std::vector<VertexSet> gens;
        for (VertexSet f : facets_)
            for (VertexSet g : right.facets_)
                gens.push_back(f.unite(VertexSet(g.bits() << n_)));
        return from_facets(n_ + right.n_, gens);
    }

    // Minimal non-faces: every singleton loop, and every subset of the vertex
    // set that is not a face while all its proper subsets are.
    [[nodiscard]] std::vector<VertexSet> minimal_nonfaces() const {
        std::vector<VertexSet> out;
        if (void_) throw std::logic_error("minimal_nonfaces of the void complex");
        for (int v : loops()) out.push_back(VertexSet::single(v));
        VertexSet vs = vertices();
        if (vs.size() > 25) throw std::logic_error("minimal_nonfaces: vertex set too large");
        for_each_subset(vs, [&](VertexSet c) {
            if (c.size() < 2 || is_face(c)) return;
            for (int v : c)
                if (!is_face(c.without(v))) return;
            out.push_back(c);
        });
        std::sort(out.begin(), out.end(), SizeLexLess{});
        return out;
    }

    // Closed neighborhood: v itself plus all w with {v,w} a face. Only
    // meaningful when v is not a loop.
    [[nodiscard]] VertexSet neighborhood(int v) const {
        if (!is_face(VertexSet::single(v)))
            throw std::invalid_argument("neighborhood of a loop");
        VertexSet nb = VertexSet::single(v);
        for (int w : vertices())
            if (w != v && is_face(VertexSet{v, w})) nb = nb.with(w);
        return nb;
    }

    [[nodiscard]] VertexSet neighborhood_of_set(VertexSet s) const {
        VertexSet nb;
        for (int v : s) nb = nb.unite(neighborhood(v));
        return nb;
    }

    // b together with the common closed neighborhood of its elements.
    [[nodiscard]] VertexSet b_hat(VertexSet b) const {
        if (b.empty()) throw std::invalid_argument("b_hat of the empty set");
        VertexSet common = VertexSet::full(n_);
        for (int v : b) common = common.intersect(neighborhood(v));
        return b.unite(common);
    }

    // Connected components of the vertex set under shared faces. Loops are
    // ignored; isolated vertices are components of their own.
    [[nodiscard]] std::vector<VertexSet> components() const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (VertexSet f : facets_) {
            if (f.size() < 2) continue;
            int head = f.min_element();
            for (int v : f) parent[find(v)] = find(head);
        }
        std::vector<VertexSet> comp(static_cast<std::size_t>(n_));
        for (int v : vertices()) comp[static_cast<std::size_t>(find(v))] = comp[static_cast<std::size_t>(find(v))].with(v);
        std::vector<VertexSet> out;
        for (VertexSet c : comp)
            if (!c.empty()) out.push_back(c);
        std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
            return a.min_element() < b.min_element();
        });
        return out;
    }

    // Void, {emptyset} and single-vertex complexes all count as connected.
    [[nodiscard]] bool is_connected() const { return components().size() <= 1; }

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && void_ == o.void_ && facets_ == o.facets_;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "n=" + std::to_string(n_) + " ";
        if (void_) return s + "void";
        s += "facets=";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += " ";
            s += facets_[i].to_string();
        }
        return s;
    }

private:
    static int check_n(int n) {
        if (n < 0 || n > 63) throw std::invalid_argument("ground-set size out of range");
        return n;
    }

    int n_ = 0;
    bool void_ = false;
    std::vector<VertexSet> facets_;
};

// Relabels a complex by the permutation perm (element v becomes perm[v]).
inline SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.n()) throw std::invalid_argument("permutation size mismatch");
    if (c.is_void()) return SimplicialComplex::void_complex(c.n());
    std::vector<VertexSet> gens;
    for (VertexSet f : c.facets()) gens.push_back(relabel(f, perm));
    return SimplicialComplex::from_facets(c.n(), gens);
}

// Multidegree c in Z^n with its canonical split c = a - b, a >= 0, b >= 0.
// Cotangent dimensions only see the class (supp a, supp b), and only when
// every negative entry is exactly -1.
struct Multidegree {
    std::vector<std::int64_t> entries;

    explicit Multidegree(std::vector<std::int64_t> e) : entries(std::move(e)) {}

    // Representative degree of a class: +1 on A, -1 on b.
    static Multidegree of_class(int n, VertexSet a, VertexSet b) {
        if (a.intersects(b)) throw std::invalid_argument("class supports must be disjoint");
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        for (int v : a) e[static_cast<std::size_t>(v)] = 1;
        for (int v : b) e[static_cast<std::size_t>(v)] = -1;
        return Multidegree(std::move(e));
    }

    [[nodiscard]] VertexSet positive_support() const {
        VertexSet s;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] > 0) s = s.with(static_cast<int>(i));
        return s;
    }

    [[nodiscard]] VertexSet negative_support() const {
        VertexSet s;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] < 0) s = s.with(static_cast<int>(i));
        return s;
    }

    // True when the negative part is a 0/1 vector, the only shape with
    // possibly nonzero cotangent cohomology.
    [[nodiscard]] bool negative_part_is_squarefree() const {
        for (std::int64_t e : entries)
            if (e < -1) return false;
        return true;
    }
};

}  // namespace cotan
