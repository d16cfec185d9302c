#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dwmm/cdtgraph.hpp"

using namespace dwmm;

namespace {

constexpr EdgeColor S = EdgeColor::Spacelike;
constexpr EdgeColor T = EdgeColor::Timelike;

// Minimal sphere by hand: two vertices, each with a spacelike loop, joined
// by one timelike edge. Half-edges 0/1 form the bottom loop, 2/3 the top
// loop, 4/5 the rung.
RibbonGraph minimal_sphere() {
    return RibbonGraph({1, 0, 3, 2, 5, 4}, {4, 0, 3, 5, 1, 2},
                       {S, S, S, S, T, T}, {false, false, false, false, false, false});
}

int count_kind(const std::vector<Strip>& strips, StripKind k) {
    int n = 0;
    for (const auto& s : strips)
        if (s.kind == k) ++n;
    return n;
}

}  // namespace

TEST_CASE("ribbon graph construction rejects malformed input") {
    // baseline is fine
    CHECK_NOTHROW(minimal_sphere());

    // empty and odd-length
    CHECK_THROWS_AS(RibbonGraph({}, {}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RibbonGraph({0}, {0}, {S}, {false}), std::invalid_argument);

    // array length mismatch
    CHECK_THROWS_AS(RibbonGraph({1, 0}, {1, 0}, {S}, {false, false}),
                    std::invalid_argument);

    // pair with a fixed point
    CHECK_THROWS_AS(RibbonGraph({0, 1}, {1, 0}, {S, S}, {false, false}),
                    std::invalid_argument);

    // pair not an involution
    CHECK_THROWS_AS(RibbonGraph({1, 2, 0, 3}, {1, 0, 3, 2}, {S, S, S, S},
                                {false, false, false, false}),
                    std::invalid_argument);

    // rotation not a permutation
    CHECK_THROWS_AS(RibbonGraph({1, 0, 3, 2}, {1, 0, 1, 2}, {S, S, S, S},
                                {false, false, false, false}),
                    std::invalid_argument);

    // index out of range
    CHECK_THROWS_AS(RibbonGraph({1, 7}, {1, 0}, {S, S}, {false, false}),
                    std::invalid_argument);

    // halves of one edge must agree on color and flip
    CHECK_THROWS_AS(RibbonGraph({1, 0}, {1, 0}, {S, T}, {false, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(RibbonGraph({1, 0}, {1, 0}, {S, S}, {true, false}),
                    std::invalid_argument);

    // two disjoint loops: structurally fine pieces, but not connected
    CHECK_THROWS_AS(RibbonGraph({1, 0, 3, 2}, {1, 0, 3, 2}, {S, S, S, S},
                                {false, false, false, false}),
                    std::invalid_argument);
}

TEST_CASE("minimal sphere anchors") {
    const RibbonGraph g = minimal_sphere();
    CHECK(g.half_edge_count() == 6);
    CHECK(g.edge_count() == 3);
    CHECK(g.vertex_count() == 2);
    CHECK(g.face_count() == 3);
    CHECK(g.spacelike_edge_count() == 2);
    CHECK(euler_characteristic(g) == 2);
    CHECK(orientable(g));
    CHECK(validate_cdt(g).valid());

    // pair/next/prev are mutually consistent and vertex_of follows next
    for (int h = 0; h < g.half_edge_count(); ++h) {
        CHECK(g.pair(g.pair(h)) == h);
        CHECK(g.prev(g.next(h)) == h);
        CHECK(g.vertex_of(g.next(h)) == g.vertex_of(h));
    }

    // kept face visits cover every edge exactly twice
    std::vector<int> edge_visits(g.edge_count(), 0);
    int total = 0;
    for (int f = 0; f < g.face_count(); ++f)
        for (int h : g.face_half_edges(f)) {
            ++edge_visits[std::min(h, g.pair(h)) / 2];
            ++total;
        }
    CHECK(total == g.half_edge_count());
    for (int e = 0; e < g.edge_count(); ++e) CHECK(edge_visits[e] == 2);

    // face_of_visit marks exactly one traversal orientation per face
    int kept_states = 0;
    for (int s = 0; s < 2 * g.half_edge_count(); ++s)
        if (g.face_of_visit(s) >= 0) ++kept_states;
    CHECK(kept_states == total);

    const auto strips = strip_decomposition(g);
    CHECK(strips.size() == 3);
    CHECK(count_kind(strips, StripKind::Singular) == 2);
    CHECK(count_kind(strips, StripKind::Regular) == 1);
    for (const auto& s : strips) {
        if (s.kind == StripKind::Singular) {
            CHECK(s.faces.size() == 1);
            CHECK(s.boundary_count == 1);
        } else {
            CHECK(s.boundary_count == 2);
        }
    }
    CHECK(classify_topology(g) == TopologyClass::Sphere);

    // the sphere builder produces this exact graph
    CHECK(graph_to_json(build_sphere({1})) == graph_to_json(g));
    CHECK(graph_to_json(build_sphere({})) == graph_to_json(g));
}

TEST_CASE("cdt validation reports local rule violations") {
    // two 2-valent vertices
    const RibbonGraph bigon({2, 3, 0, 1}, {1, 0, 3, 2}, {T, S, T, S},
                            {false, false, false, false});
    CHECK(bigon.vertex_count() == 2);
    const auto rep = validate_cdt(bigon);
    CHECK_FALSE(rep.valid());
    // two valence violations plus one per digon face seeing a single
    // timelike visit
    CHECK(rep.violations.size() == 4);
    CHECK(rep.violations[0].find("valence") != std::string::npos);

    // trivalent but no timelike edge anywhere
    const RibbonGraph untimed({1, 0, 3, 2, 5, 4}, {4, 0, 3, 5, 1, 2},
                              {S, S, S, S, S, S},
                              {false, false, false, false, false, false});
    const auto rep2 = validate_cdt(untimed);
    CHECK_FALSE(rep2.valid());
    CHECK(rep2.violations.size() == 2);
    CHECK(rep2.violations[0].find("timelike") != std::string::npos);

    // timelike loop: vertex rule and face rule both break
    const RibbonGraph loops({1, 0, 3, 2, 5, 4}, {4, 0, 3, 5, 1, 2},
                            {T, T, S, S, S, S},
                            {false, false, false, false, false, false});
    const auto rep3 = validate_cdt(loops);
    CHECK_FALSE(rep3.valid());
    bool face_violation = false;
    for (const auto& v : rep3.violations)
        if (v.find("face") != std::string::npos) face_violation = true;
    CHECK(face_violation);

    CHECK_THROWS_AS(strip_decomposition(loops), std::invalid_argument);
    CHECK_THROWS_AS(classify_topology(loops), std::invalid_argument);
}

TEST_CASE("sphere builder") {
    for (const auto& sizes :
         std::vector<std::vector<int>>{{2}, {3}, {1, 1}, {2, 4}, {1, 3, 2}}) {
        CAPTURE(sizes.size());
        const RibbonGraph g = build_sphere(sizes);
        CHECK(validate_cdt(g).valid());
        CHECK(euler_characteristic(g) == 2);
        CHECK(orientable(g));
        CHECK(classify_topology(g) == TopologyClass::Sphere);
        const auto strips = strip_decomposition(g);
        CHECK(strips.size() == sizes.size() + 2);
        CHECK(count_kind(strips, StripKind::Singular) == 2);
        CHECK(count_kind(strips, StripKind::Regular) == static_cast<int>(sizes.size()));
        CHECK(count_kind(strips, StripKind::Moebius) == 0);
    }
    // vertex and face counts scale with the rung numbers
    const RibbonGraph g = build_sphere({3, 5});
    CHECK(g.vertex_count() == 2 * (3 + 5));
    CHECK(g.edge_count() == 3 * (3 + 5));
    CHECK(g.face_count() == 2 + 3 + 5);
    CHECK_THROWS_AS(build_sphere({0}), std::invalid_argument);
    CHECK_THROWS_AS(build_sphere({2, -1}), std::invalid_argument);
}

TEST_CASE("torus builder") {
    for (const auto& sizes :
         std::vector<std::vector<int>>{{1}, {4}, {2, 5}, {2, 3, 4}}) {
        const RibbonGraph g = build_torus(sizes);
        CHECK(validate_cdt(g).valid());
        CHECK(euler_characteristic(g) == 0);
        CHECK(orientable(g));
        CHECK(classify_topology(g) == TopologyClass::Torus);
        const auto strips = strip_decomposition(g);
        CHECK(strips.size() == sizes.size());
        CHECK(count_kind(strips, StripKind::Regular) == static_cast<int>(sizes.size()));
        for (const auto& s : strips) CHECK(s.boundary_count == 2);
    }
    const RibbonGraph g = build_torus({1});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 1);
    CHECK_THROWS_AS(build_torus({}), std::invalid_argument);
    CHECK_THROWS_AS(build_torus({2, 0}), std::invalid_argument);
}

TEST_CASE("projective plane builder") {
    for (const auto& sizes :
         std::vector<std::vector<int>>{{1}, {3}, {2, 4}, {1, 1, 2}}) {
        const RibbonGraph g = build_projective(sizes);
        CHECK(validate_cdt(g).valid());
        CHECK(euler_characteristic(g) == 1);
        CHECK_FALSE(orientable(g));
        CHECK(classify_topology(g) == TopologyClass::ProjectivePlane);
        const auto strips = strip_decomposition(g);
        CHECK(strips.size() == sizes.size() + 1);
        CHECK(count_kind(strips, StripKind::Singular) == 1);
        CHECK(count_kind(strips, StripKind::Moebius) == 1);
        CHECK(count_kind(strips, StripKind::Regular) == static_cast<int>(sizes.size()) - 1);
        for (const auto& s : strips)
            if (s.kind == StripKind::Moebius) CHECK(s.boundary_count == 1);
    }
    const RibbonGraph g = build_projective({1});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);

    // both drawing conventions land on the same half-edge realization
    for (const auto& sizes : std::vector<std::vector<int>>{{2}, {3, 1}})
        CHECK(graph_to_json(build_projective(sizes, 1)) ==
              graph_to_json(build_projective(sizes, 2)));

    CHECK_THROWS_AS(build_projective({}), std::invalid_argument);
    CHECK_THROWS_AS(build_projective({2}, 3), std::invalid_argument);
}

TEST_CASE("klein bottle builders") {
    // variant 1: Moebius closures at both ends
    for (const auto& sizes :
         std::vector<std::vector<int>>{{1, 1}, {3, 2}, {2, 3, 4}}) {
        const RibbonGraph g = build_klein(sizes, 1);
        CHECK(validate_cdt(g).valid());
        CHECK(euler_characteristic(g) == 0);
        CHECK_FALSE(orientable(g));
        CHECK(classify_topology(g) == TopologyClass::KleinBottle);
        const auto strips = strip_decomposition(g);
        CHECK(strips.size() == sizes.size());
        CHECK(count_kind(strips, StripKind::Moebius) == 2);
        CHECK(count_kind(strips, StripKind::Singular) == 0);
    }
    // variants 2 and 3 share variant 1's realization
    CHECK(graph_to_json(build_klein({2, 3}, 2)) == graph_to_json(build_klein({2, 3}, 1)));
    CHECK(graph_to_json(build_klein({2, 3}, 3)) == graph_to_json(build_klein({2, 3}, 1)));

    // variant 4: periodic stack with an orientation-reversing closing gluing
    for (const auto& sizes : std::vector<std::vector<int>>{{1}, {3}, {2, 5}}) {
        const RibbonGraph g = build_klein(sizes, 4);
        CHECK(validate_cdt(g).valid());
        CHECK(euler_characteristic(g) == 0);
        CHECK_FALSE(orientable(g));
        CHECK(classify_topology(g) == TopologyClass::KleinBottle);
        const auto strips = strip_decomposition(g);
        CHECK(strips.size() == sizes.size());
        CHECK(count_kind(strips, StripKind::Regular) == static_cast<int>(sizes.size()));
    }
    const RibbonGraph g = build_klein({1}, 4);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 1);

    CHECK_THROWS_AS(build_klein({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_klein({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_klein({1, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_klein({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("random census invariants") {
    int seen_class[4] = {0, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        CAPTURE(seed);
        const int strip_count = 1 + static_cast<int>(seed % 4);
        const RibbonGraph g = random_cdt_graph(seed, strip_count, 1, 5);
        REQUIRE(validate_cdt(g).valid());

        // the spacelike subgraph has one loop per circle, so its Euler
        // number vanishes
        CHECK(g.vertex_count() == g.spacelike_edge_count());

        const auto strips = strip_decomposition(g);
        int singular = 0;
        int faces = 0;
        for (const auto& s : strips) {
            faces += static_cast<int>(s.faces.size());
            CHECK(s.boundary_count >= 1);
            CHECK(s.boundary_count <= 2);
            if (s.kind == StripKind::Singular) {
                ++singular;
                CHECK(s.faces.size() == 1);
                CHECK(s.boundary_count == 1);
            }
            if (s.kind == StripKind::Moebius) CHECK(s.boundary_count == 1);
            if (s.kind == StripKind::Regular) CHECK(s.boundary_count == 2);
        }
        CHECK(faces == g.face_count());

        const int chi = euler_characteristic(g);
        CHECK(chi == singular);
        CHECK(chi >= 0);
        CHECK(chi <= 2);

        const TopologyClass cls = classify_topology(g);
        seen_class[static_cast<int>(cls)]++;
        if (orientable(g)) {
            CHECK(cls != TopologyClass::ProjectivePlane);
            CHECK(cls != TopologyClass::KleinBottle);
        } else {
            CHECK((cls == TopologyClass::ProjectivePlane ||
                   cls == TopologyClass::KleinBottle));
        }

        // determinism
        CHECK(graph_to_json(random_cdt_graph(seed, strip_count, 1, 5)) ==
              graph_to_json(g));
    }
    for (int c = 0; c < 4; ++c) CHECK(seen_class[c] > 0);

    CHECK_THROWS_AS(random_cdt_graph(1, 0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(random_cdt_graph(1, 2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(random_cdt_graph(1, 2, 0, 2), std::invalid_argument);
}

TEST_CASE("graph json round trip") {
    const RibbonGraph g = build_torus({2, 3});
    const std::string text = graph_to_json(g);
    const RibbonGraph h = graph_from_json(text);
    CHECK(graph_to_json(h) == text);
    CHECK(h.half_edge_count() == g.half_edge_count());
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.face_count() == g.face_count());
    CHECK(classify_topology(h) == TopologyClass::Torus);

    CHECK(text.find("\"pair\"") != std::string::npos);
    CHECK(text.find("\"color\"") != std::string::npos);

    CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(R"({"pair":[1,0],"next":[1,0],"color":["s","x"],"flip":[false,false]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(R"({"pair":[0,1],"next":[1,0],"color":["s","s"],"flip":[false,false]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(R"({"pair":[1,0],"next":[1,0],"color":["s","s"],"flip":"no"})"),
                    std::invalid_argument);
}

TEST_CASE("strip and topology names") {
    CHECK(to_string(EdgeColor::Spacelike) == "spacelike");
    CHECK(to_string(EdgeColor::Timelike) == "timelike");
    CHECK(to_string(StripKind::Regular) == "regular");
    CHECK(to_string(StripKind::Singular) == "singular");
    CHECK(to_string(StripKind::Moebius) == "moebius");
    CHECK(to_string(TopologyClass::Sphere) == "sphere");
    CHECK(to_string(TopologyClass::Torus) == "torus");
    CHECK(to_string(TopologyClass::ProjectivePlane) == "projective-plane");
    CHECK(to_string(TopologyClass::KleinBottle) == "klein-bottle");
}
