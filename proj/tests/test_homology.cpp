#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "cotan/homology.hpp"

using namespace cotan;

namespace {

const FieldChoice Q = FieldChoice::rationals();

CohomologyDims absolute(const SimplicialComplex& x, bool reduced = false) {
    return cohomology_dims(x, Q, reduced);
}

// Rebuilds the sub order complex on the total order complex's vertex ids,
// so the generic simplicial-pair skeleton can serve as an oracle for the
// direct poset-pair skeleton.
PairSkeleton oracle_pair(const FacePoset& total, const FacePoset& sub) {
    auto total_oc = order_complex(total);
    auto sub_oc = order_complex(sub);
    const int m = static_cast<int>(total.elements.size());
    std::vector<int> perm(sub.elements.size() + (sub.contains_empty ? 1 : 0));
    for (std::size_t i = 0; i < sub.elements.size(); ++i) {
        auto it = std::lower_bound(total.elements.begin(), total.elements.end(), sub.elements[i],
                                   SizeLexLess{});
        perm[i] = static_cast<int>(it - total.elements.begin());
    }
    if (sub.contains_empty) perm[sub.elements.size()] = m;

    std::vector<VertexSet> facets;
    if (!sub_oc.is_void())
        for (VertexSet f : sub_oc.facets()) facets.push_back(relabel(f, perm));
    SimplicialComplex embedded = facets.empty()
                                     ? SimplicialComplex::void_complex(total_oc.n())
                                     : SimplicialComplex::from_facets(total_oc.n(), facets);
    return pair_skeleton({total_oc, embedded});
}

}  // namespace

TEST_CASE("face poset construction") {
    auto p = FacePoset::from_faces({VertexSet{0, 1}, VertexSet{}, VertexSet{1}, VertexSet{0, 1}});
    REQUIRE(p.contains_empty);
    REQUIRE(p.elements == std::vector<VertexSet>{VertexSet{1}, VertexSet{0, 1}});
    REQUIRE(p.size() == 3);
    REQUIRE(p.has_element(VertexSet{}));
    REQUIRE(p.has_element(VertexSet{0, 1}));
    REQUIRE_FALSE(p.has_element(VertexSet{0}));
    REQUIRE(FacePoset{}.is_empty());
}

TEST_CASE("order complex of a chain is a simplex") {
    auto p = FacePoset::from_faces({VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1, 2}});
    auto oc = order_complex(p);
    REQUIRE(oc.facets() == std::vector<VertexSet>{VertexSet{0, 1, 2}});
}

TEST_CASE("order complex of an antichain is discrete points") {
    auto p = FacePoset::from_faces({VertexSet{0}, VertexSet{1}, VertexSet{2}});
    auto oc = order_complex(p);
    REQUIRE(oc.dimension() == 0);
    REQUIRE(oc.vertices() == VertexSet{0, 1, 2});
}

TEST_CASE("empty face cones the order complex") {
    auto p = FacePoset::from_faces({VertexSet{}, VertexSet{0}, VertexSet{1}});
    auto oc = order_complex(p);
    // Two points plus the apex: a path, contractible.
    REQUIRE(absolute(oc) == CohomologyDims{1, 0});
    auto alone = order_complex(FacePoset::from_faces({VertexSet{}}));
    REQUIRE(alone.dimension() == 0);
    REQUIRE(order_complex(FacePoset{}).is_void());
}

TEST_CASE("order complex of the proper faces of a triangle is a circle") {
    std::vector<VertexSet> faces = {VertexSet{0},    VertexSet{1},    VertexSet{2},
                                    VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}};
    auto oc = order_complex(FacePoset::from_faces(faces));
    REQUIRE(oc.facets().size() == 6);
    REQUIRE(absolute(oc) == CohomologyDims{1, 1});
}

TEST_CASE("absolute cohomology of basic spaces") {
    auto circle = SimplicialComplex::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    REQUIRE(absolute(circle) == CohomologyDims{1, 1});
    auto two_edges = SimplicialComplex::from_facets(4, {VertexSet{0, 1}, VertexSet{2, 3}});
    REQUIRE(absolute(two_edges) == CohomologyDims{2, 0});
    REQUIRE(absolute(SimplicialComplex::full_simplex(3)) == CohomologyDims{1, 0});
    auto point = SimplicialComplex::points(1, VertexSet{0});
    REQUIRE(absolute(point) == CohomologyDims{1, 0});
    REQUIRE(absolute(point, true) == CohomologyDims{0, 0});
    auto five = SimplicialComplex::points(5, VertexSet::full(5));
    REQUIRE(absolute(five) == CohomologyDims{5, 0});
    REQUIRE(absolute(five, true) == CohomologyDims{4, 0});
}

TEST_CASE("relative cohomology of the interval modulo its boundary") {
    auto interval = SimplicialComplex::from_edges(2, {{0, 1}});
    auto boundary = SimplicialComplex::points(2, VertexSet{0, 1});
    REQUIRE(relative_cohomology_dims({interval, boundary}, Q) == CohomologyDims{0, 1});
}

TEST_CASE("cone modulo its base computes the suspension of the base") {
    // Path 1-0-2 is the cone over two points; modulo the full base the pair
    // carries the reduced cohomology of the suspension of two points.
    auto star = SimplicialComplex::from_edges(3, {{0, 1}, {0, 2}});
    auto base = SimplicialComplex::points(3, VertexSet{1, 2});
    REQUIRE(relative_cohomology_dims({star, base}, Q) == CohomologyDims{0, 1});
    // Modulo a single base point the pair is contractible.
    auto pt = SimplicialComplex::points(3, VertexSet{1});
    REQUIRE(relative_cohomology_dims({star, pt}, Q) == CohomologyDims{0, 0});
}

TEST_CASE("pair skeleton validates the pair") {
    auto total = SimplicialComplex::from_edges(3, {{0, 1}});
    REQUIRE_THROWS_AS(
        pair_skeleton({total, SimplicialComplex::points(2, VertexSet{0})}),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        pair_skeleton({total, SimplicialComplex::from_edges(3, {{0, 2}})}),
        std::invalid_argument);
}

TEST_CASE("induced maps on a contractible pair") {
    auto interval = SimplicialComplex::from_edges(2, {{0, 1}});
    auto boundary = SimplicialComplex::points(2, VertexSet{0, 1});
    auto maps = induced_h_maps(SimplicialPair{interval, boundary}, Q);
    REQUIRE(maps.h0_total == 1);
    REQUIRE(maps.h1_total == 0);
    REQUIRE(maps.h0_sub == 2);
    REQUIRE(maps.h1_sub == 0);
    REQUIRE(maps.rank_h0 == 1);
    REQUIRE(maps.rank_h1 == 0);
}

TEST_CASE("induced maps detect a killed loop") {
    // Circle relative to one of its edges: the loop dies in the subspace.
    auto circle = SimplicialComplex::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    auto edge = SimplicialComplex::from_facets(3, {VertexSet{0, 1}});
    auto maps = induced_h_maps(SimplicialPair{circle, edge}, Q);
    REQUIRE(maps.h0_total == 1);
    REQUIRE(maps.h1_total == 1);
    REQUIRE(maps.h0_sub == 1);
    REQUIRE(maps.h1_sub == 0);
    REQUIRE(maps.rank_h0 == 1);
    REQUIRE(maps.rank_h1 == 0);
}

TEST_CASE("direct poset pair skeleton agrees with the simplicial oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<std::uint64_t> mask(0, 15);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<VertexSet> faces;
        int k = count(rng);
        for (int i = 0; i < k; ++i) faces.push_back(VertexSet(mask(rng)));
        auto total = FacePoset::from_faces(faces);

        std::vector<VertexSet> sub_faces;
        for (VertexSet f : faces)
            if (rng() % 2) sub_faces.push_back(f);
        auto sub = FacePoset::from_faces(sub_faces);
        if (sub.contains_empty && !total.contains_empty) continue;

        auto direct = order_pair_skeleton(total, sub);
        auto oracle = oracle_pair(total, sub);
        for (bool reduced : {false, true}) {
            if (reduced && !sub.is_empty()) continue;
            REQUIRE(skeleton_relative_dims(direct, Q, reduced) ==
                    skeleton_relative_dims(oracle, Q, reduced));
        }
        auto dm = induced_h_maps(direct, Q);
        auto om = induced_h_maps(oracle, Q);
        REQUIRE(dm.h0_total == om.h0_total);
        REQUIRE(dm.h1_total == om.h1_total);
        REQUIRE(dm.h0_sub == om.h0_sub);
        REQUIRE(dm.h1_sub == om.h1_sub);
        REQUIRE(dm.rank_h0 == om.rank_h0);
        REQUIRE(dm.rank_h1 == om.rank_h1);
    }
}

TEST_CASE("order pair skeleton rejects a sub poset that is not contained") {
    auto total = FacePoset::from_faces({VertexSet{0}, VertexSet{1}});
    auto sub = FacePoset::from_faces({VertexSet{2}});
    REQUIRE_THROWS_AS(order_pair_skeleton(total, sub), std::invalid_argument);
}

TEST_CASE("cohomology is field independent on these spaces") {
    auto circle = SimplicialComplex::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (auto field : {FieldChoice::prime(2), FieldChoice::prime(3)}) {
        REQUIRE(cohomology_dims(circle, field, false) == CohomologyDims{1, 1});
    }
}
