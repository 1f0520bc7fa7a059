#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cotan/cotangent.hpp"
#include "cotan/graphs1d.hpp"

using namespace cotan;

namespace {

const FieldChoice Q = FieldChoice::rationals();

SimplicialComplex cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimplicialComplex::from_edges(n, edges);
}

}  // namespace

TEST_CASE("graph recognition") {
    REQUIRE(is_graph_complex(cycle(4)));
    REQUIRE_FALSE(is_graph_complex(SimplicialComplex::points(3, VertexSet::full(3))));
    REQUIRE_FALSE(is_graph_complex(SimplicialComplex::full_simplex(3)));
    // A loop disqualifies: vertex 2 is not a face here.
    auto loopy = SimplicialComplex::from_facets(3, {VertexSet{0, 1}});
    REQUIRE_FALSE(is_graph_complex(loopy));
    // Isolated vertices are fine.
    REQUIRE(is_graph_complex(SimplicialComplex::from_edges(3, {{0, 1}})));
    REQUIRE_THROWS_AS(require_graph(SimplicialComplex::full_simplex(3)), std::invalid_argument);
}

TEST_CASE("degrees") {
    auto star4 = SimplicialComplex::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    REQUIRE(local_degree(star4, 0) == 4);
    REQUIRE(local_degree(star4, 1) == 1);
    REQUIRE_FALSE(max_degree_at_most_three(star4));
    REQUIRE(max_degree_at_most_three(cycle(5)));
    REQUIRE(graph_edges(star4).size() == 4);
}

TEST_CASE("cycle supports enumerates exactly the cycles") {
    REQUIRE(cycle_supports(cycle(5)) == std::vector<VertexSet>{VertexSet::full(5)});
    auto tree = SimplicialComplex::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
    REQUIRE(cycle_supports(tree).empty());
    // Two triangles sharing vertex 0.
    auto two = SimplicialComplex::from_edges(
        5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto supports = cycle_supports(two);
    REQUIRE(supports == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{0, 3, 4}});
}

TEST_CASE("dominating cycles: fast form equals the definition") {
    // Spot values first.
    REQUIRE(every_cycle_dominates(cycle(3)));
    REQUIRE(every_cycle_dominates(cycle(7)));
    auto two_triangles = SimplicialComplex::from_edges(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    REQUIRE_FALSE(every_cycle_dominates(two_triangles));
    REQUIRE_FALSE(neighborhood_deletions_acyclic(two_triangles));

    // A pendant leaf on a 6-cycle is still dominated by the cycle.
    auto leafed = SimplicialComplex::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
    REQUIRE(every_cycle_dominates(leafed));
    REQUIRE(neighborhood_deletions_acyclic(leafed));

    // Exhaustive sweep: the acyclic-deletion form is the oracle's equal.
    auto levels = enumerate_graphs_up_to(8);
    for (int n = 1; n <= 8; ++n) {
        long long disagreements = 0;
        for (const auto& g : levels[static_cast<std::size_t>(n)])
            if (every_cycle_dominates(g) != neighborhood_deletions_acyclic(g))
                ++disagreements;
        REQUIRE(disagreements == 0);
    }
}

TEST_CASE("pair deletion connectivity") {
    auto p4 = SimplicialComplex::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(pair_nonface_deletions_connected(p4));
    auto two_edges = SimplicialComplex::from_facets(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    REQUIRE_FALSE(pair_nonface_deletions_connected(two_edges));
    // No two-element minimal nonface at all: vacuously true.
    REQUIRE(pair_nonface_deletions_connected(
        SimplicialComplex::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
    // The 7-cycle fails here, not at the cycle condition.
    REQUIRE_FALSE(pair_nonface_deletions_connected(cycle(7)));
}

TEST_CASE("graph acyclicity") {
    REQUIRE(graph_is_acyclic(SimplicialComplex::from_edges(4, {{0, 1}, {1, 2}, {1, 3}})));
    REQUIRE_FALSE(graph_is_acyclic(cycle(3)));
    REQUIRE(graph_is_acyclic(SimplicialComplex::from_edges(2, {})));
}

TEST_CASE("chordless cycle inventory") {
    REQUIRE(chordless_cycles(cycle(4)) == std::vector<VertexSet>{VertexSet::full(4)});
    auto k4 = SimplicialComplex::from_edges(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE(chordless_cycles(k4).size() == 4);
    REQUIRE(max_chordless_len(k4) == 3);
    REQUIRE(max_chordless_len(cycle(6)) == 6);
    REQUIRE(max_chordless_len(SimplicialComplex::from_edges(3, {{0, 1}}))== 0);
}

TEST_CASE("graph enumeration counts") {
    auto levels = enumerate_graphs_up_to(7);
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 7; ++n) counts.push_back(levels[static_cast<std::size_t>(n)].size());
    REQUIRE(counts == std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044});
    // Every representative is canonical and distinct.
    std::set<std::string> forms;
    for (const auto& g : levels[5]) forms.insert(canonical_form(g));
    REQUIRE(forms.size() == 34);
}

TEST_CASE("unobstructed graphs equal vanishing second module up to six vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            if (g.dimension() != 1) continue;
            INFO(g.to_string());
            REQUIRE(unobstructed_1d(g) == t2_vanishes(g, Q));
        }
}

TEST_CASE("classification through six vertices is stable") {
    auto result = classify_1d(6);
    REQUIRE(result.count() == 21);
    auto lines = classification_lines(result);
    REQUIRE(lines.size() == 21);
    REQUIRE(lines[0] == "n=2 edges=01 matroid=1");
    REQUIRE(lines[1] == "n=3 edges=12 matroid=0");
    REQUIRE(lines[2] == "n=3 edges=01,02 matroid=1");
    REQUIRE(lines[3] == "n=3 edges=01,02,12 matroid=1");
    // The square with a pendant leaf is the only five-vertex entry with a leaf.
    int five_leaf = 0;
    for (const auto& e : result.entries) {
        if (e.n != 5) continue;
        for (int v : e.rep.vertices())
            if (local_degree(e.rep, v) == 1) {
                ++five_leaf;
                break;
            }
    }
    REQUIRE(five_leaf == 1);
    REQUIRE_THROWS_AS(classify_1d(9), std::invalid_argument);
}

TEST_CASE("classification lines render canonical edges in order") {
    auto result = classify_1d(4);
    for (const auto& e : result.entries) {
        auto line = classification_line(e);
        REQUIRE(line.find("n=" + std::to_string(e.n)) == 0);
        REQUIRE(line.find("matroid=") != std::string::npos);
    }
}

TEST_CASE("matroid flags decode to complete multipartite graphs") {
    auto result = classify_1d(6);
    int flagged = 0;
    for (const auto& e : result.entries)
        if (e.matroid) {
            ++flagged;
            REQUIRE(is_matroid_complex(e.rep));
        }
    REQUIRE(flagged == 9);
}

TEST_CASE("structural bounds on the full classified list") {
    auto result = classify_1d(8);
    REQUIRE(result.count() == 26);
    for (const auto& e : result.entries) {
        REQUIRE(e.n <= 8);
        REQUIRE(e.matroid == is_matroid_complex(e.rep));
        REQUIRE(max_chordless_len(e.rep) <= 6);

        bool leaf = false;
        for (int v : e.rep.vertices())
            if (local_degree(e.rep, v) == 1) leaf = true;
        if (leaf) REQUIRE(e.n <= 5);

        // A cycle of length c caps the vertex count at 2c.
        for (VertexSet s : cycle_supports(e.rep))
            REQUIRE(e.n <= 2 * static_cast<int>(s.size()));
    }
}
