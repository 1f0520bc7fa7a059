#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotan/canonical.hpp"
#include "cotan/complex.hpp"
#include "cotan/matroids.hpp"

namespace cotan {

// Graphs here are 1-dimensional complexes with every index an actual vertex.
inline bool is_graph_complex(const SimplicialComplex& g) {
    return !g.is_void() && g.dimension() == 1 && g.loops().empty();
}

inline void require_graph(const SimplicialComplex& g) {
    if (!is_graph_complex(g))
        throw std::invalid_argument("expected a loop-free complex of dimension exactly 1");
}

inline std::vector<VertexSet> graph_edges(const SimplicialComplex& g) {
    std::vector<VertexSet> out;
    for (VertexSet f : g.facets())
        if (f.size() == 2) out.push_back(f);
    return out;
}

inline int local_degree(const SimplicialComplex& g, int v) {
    return static_cast<int>(g.neighborhood(v).size()) - 1;
}

inline bool max_degree_at_most_three(const SimplicialComplex& g) {
    for (int v : g.vertices())
        if (local_degree(g, v) > 3) return false;
    return true;
}

// Vertex supports of all simple cycles (each support once, even when several
// cycles traverse it, as in complete graphs).
inline std::vector<VertexSet> cycle_supports(const SimplicialComplex& g) {
    std::set<std::uint64_t> found;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (int w : g.neighborhood(u).without(u)) {
            if (w == start && path.size() >= 3) {
                VertexSet s;
                for (int x : path) s = s.with(x);
                found.insert(s.bits());
                continue;
            }
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on_path[static_cast<std::size_t>(w)] = 1;
            self(self, start, w);
            on_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    };
    for (int s : g.vertices()) {
        path.assign(1, s);
        on_path.assign(static_cast<std::size_t>(g.n()), 0);
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(dfs, s, s);
    }
    std::vector<VertexSet> out;
    for (std::uint64_t bits : found) out.push_back(VertexSet(bits));
    std::sort(out.begin(), out.end(), SizeLexLess{});
    return out;
}

// Brute-force formulation: every cycle's vertex set meets every closed
// neighborhood. Reference oracle for the deletion test below.
inline bool every_cycle_dominates(const SimplicialComplex& g) {
    const auto cycles = cycle_supports(g);
    for (VertexSet s : cycles)
        for (int v : g.vertices())
            if (!g.neighborhood(v).intersects(s)) return false;
    return true;
}

inline bool graph_is_acyclic(const SimplicialComplex& g) {
    const long long e = static_cast<long long>(graph_edges(g).size());
    const long long v = static_cast<long long>(g.vertices().size());
    const long long c = static_cast<long long>(g.components().size());
    return e == v - c;
}

// Equivalent fast form of the domination condition: no cycle survives the
// deletion of any closed neighborhood.
inline bool neighborhood_deletions_acyclic(const SimplicialComplex& g) {
    for (int v : g.vertices())
        if (!graph_is_acyclic(g.deletion(g.neighborhood(v)))) return false;
    return true;
}

// For each nonadjacent vertex pair b, deleting b together with the common
// closed neighborhood leaves a connected complex.
inline bool pair_nonface_deletions_connected(const SimplicialComplex& g) {
    const VertexSet verts = g.vertices();
    for (int u : verts)
        for (int v : verts) {
            if (v <= u) continue;
            const VertexSet b{{u, v}};
            if (g.is_face(b)) continue;
            if (!g.deletion(g.b_hat(b)).is_connected()) return false;
        }
    return true;
}

inline bool unobstructed_1d(const SimplicialComplex& g) {
    require_graph(g);
    return max_degree_at_most_three(g) && neighborhood_deletions_acyclic(g) &&
           pair_nonface_deletions_connected(g);
}

// Induced cycles: vertex sets whose induced subgraph is connected and
// 2-regular.
inline std::vector<VertexSet> chordless_cycles(const SimplicialComplex& g) {
    std::vector<VertexSet> out;
    for_each_subset(g.vertices(), [&](VertexSet s) {
        if (s.size() < 3) return;
        for (int v : s)
            if (g.neighborhood(v).without(v).intersect(s).size() != 2) return;
        if (g.restriction(s).is_connected()) out.push_back(s);
    });
    std::sort(out.begin(), out.end(), SizeLexLess{});
    return out;
}

inline int max_chordless_len(const SimplicialComplex& g) {
    int len = 0;
    for (VertexSet s : chordless_cycles(g)) len = std::max(len, static_cast<int>(s.size()));
    return len;
}

// All loop-free graphs on exactly n labeled-then-canonicalized vertices per
// level 1..max_n, including edgeless ones, one representative per
// isomorphism class. Level n grows from level n-1 by attaching a fresh
// vertex with every possible neighborhood.
inline std::vector<std::vector<SimplicialComplex>> enumerate_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 10) throw std::invalid_argument("graph enumeration supports 1..10");
    std::vector<std::vector<SimplicialComplex>> levels(static_cast<std::size_t>(max_n) + 1);
    levels[1].push_back(SimplicialComplex::points(1, VertexSet::full(1)));
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, SimplicialComplex>> reps;
        for (const SimplicialComplex& parent : levels[static_cast<std::size_t>(n) - 1]) {
            std::vector<std::pair<int, int>> base_edges;
            for (VertexSet e : graph_edges(parent))
                base_edges.emplace_back(e.min_element(), e.max_element());
            for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
                auto edges = base_edges;
                for (int v : VertexSet(mask)) edges.emplace_back(v, n - 1);
                const SimplicialComplex c = SimplicialComplex::from_edges(n, edges);
                const SimplicialComplex rep = canonical_representative(c);
                std::string form = canonical_form(rep);
                if (seen.insert(form).second) reps.emplace_back(std::move(form), rep);
            }
        }
        std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
            const auto ea = a.second.facets().size();
            const auto eb = b.second.facets().size();
            return ea != eb ? ea < eb : a.first < b.first;
        });
        for (auto& [form, rep] : reps) levels[static_cast<std::size_t>(n)].push_back(rep);
    }
    return levels;
}

inline std::vector<SimplicialComplex> enumerate_graphs(int n) {
    return enumerate_graphs_up_to(n)[static_cast<std::size_t>(n)];
}

struct ClassEntry {
    SimplicialComplex rep;
    int n = 0;
    int edge_count = 0;
    bool matroid = false;
};

struct ClassificationResult {
    std::vector<ClassEntry> entries;

    [[nodiscard]] std::size_t count() const { return entries.size(); }
};

// All unobstructed graphs (dimension exactly 1) on 2..max_n vertices up to
// isomorphism, with a matroid flag per entry.
inline ClassificationResult classify_1d(int max_n = 8) {
    if (max_n > 8)
        throw std::invalid_argument(
            "classification beyond 8 vertices is empty and not supported");
    ClassificationResult res;
    if (max_n < 2) return res;
    const auto levels = enumerate_graphs_up_to(max_n);
    for (int n = 2; n <= max_n; ++n)
        for (const SimplicialComplex& g : levels[static_cast<std::size_t>(n)]) {
            if (g.dimension() != 1) continue;
            if (!unobstructed_1d(g)) continue;
            res.entries.push_back({g, n, static_cast<int>(graph_edges(g).size()),
                                   is_matroid_complex(g)});
        }
    return res;
}

// Golden-file rendering: one line per class. Vertices of the canonical
// representative are single digits (n <= 8); isolated vertices are implied
// by n.
inline std::string classification_line(const ClassEntry& e) {
    std::string s = "n=" + std::to_string(e.n) + " edges=";
    bool first = true;
    for (VertexSet edge : graph_edges(e.rep)) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(edge.min_element());
        s += std::to_string(edge.max_element());
    }
    s += " matroid=";
    s += e.matroid ? '1' : '0';
    return s;
}

inline std::vector<std::string> classification_lines(const ClassificationResult& r) {
    std::vector<std::string> out;
    out.reserve(r.entries.size());
    for (const ClassEntry& e : r.entries) out.push_back(classification_line(e));
    return out;
}

}  // namespace cotan
