#include <doctest.h>

#include "vknot/fixtures.hpp"
#include "vknot/invariants.hpp"
#include "vknot/medial.hpp"

using namespace vknot;

namespace {

SignedCyclicGraph one_vertex_loop(int sign) {
    return SignedCyclicGraph({{0, 1}}, {{0, 1, sign}});
}

}  // namespace

TEST_CASE("medial of the edgeless graph is the unknot") {
    auto [d, map] = medial(SignedCyclicGraph::isolated_vertices(1));
    CHECK(d.crossing_count() == 0);
    CHECK(d.free_loops() == 1);
    CHECK(map.vertex_parallel.empty());
}

TEST_CASE("medial of a positive planar loop is the positive kink") {
    auto [d, map] = medial(one_vertex_loop(+1));
    CHECK(canonical(d) == fixtures::kink_plus());
    CHECK(map.vertex_parallel[0] == Smoothing::B);
    CHECK(bracket(d).to_string() == "B + Ad");
}

TEST_CASE("medial of a negative planar loop is the negative kink") {
    auto [d, map] = medial(one_vertex_loop(-1));
    CHECK(canonical(d) == fixtures::kink_minus());
    CHECK(map.vertex_parallel[0] == Smoothing::A);
    CHECK(bracket(d).to_string() == "Bd + A");
}

TEST_CASE("medial of the triangle is a trefoil diagram") {
    auto [d, map] = medial(fixtures::triangle());
    CHECK(d.crossing_count() == 3);
    CHECK(trace_components(d).components() == 1);
    CHECK(canonical(d) == fixtures::trefoil_mirror());
    CHECK(bracket(d) == bracket(fixtures::trefoil_mirror()));
    CHECK(jones(d) == jones(fixtures::trefoil_mirror()));
}

TEST_CASE("medial crossing count and state anchors") {
    for (int seed = 0; seed < 80; ++seed) {
        SignedCyclicGraph g = random_cyclic_graph(1 + seed % 4, seed % 6, 0.5, 8000 + seed);
        auto [d, map] = medial(g);
        CHECK(d.crossing_count() == g.edge_count());
        CHECK(loop_count(d, map.vertex_parallel_state()) == g.vertex_count());
        CHECK(loop_count(d, map.edge_parallel_state()) == boundary_components(g));
        CHECK(checkerboard_colorable(d).has_value());
    }
}

TEST_CASE("the two proof colorings of a medial diagram") {
    for (int seed = 0; seed < 30; ++seed) {
        SignedCyclicGraph g = random_cyclic_graph(1 + seed % 3, 1 + seed % 5, 0.5, 9000 + seed);
        auto [d, map] = medial(g);
        Coloring vc = medial_vertex_coloring(g, d);
        // The vertex coloring recovers a graph equivalent to g.
        SignedCyclicGraph back = tait_graph(d, vc);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(f_expansion(back) == f_expansion(g));
        if (g.dart_count() <= 8) {
            CHECK(equivalent_cyclic_graphs(back, g));
        }
        // The complementary coloring gives the other Tait graph, with one
        // vertex per boundary component.
        SignedCyclicGraph dual = tait_graph(d, vc.complemented());
        CHECK(dual.vertex_count() == boundary_components(g) + 0);
        CHECK(f_expansion(dual) == f_expansion(g));
    }
}

TEST_CASE("complementary Tait graphs are sign-flipped geometric duals") {
    for (int seed = 0; seed < 30; ++seed) {
        SignedCyclicGraph g = random_cyclic_graph(1 + seed % 3, 1 + seed % 5, 0.5, 9500 + seed);
        auto [d, map] = medial(g);
        auto col = checkerboard_colorable(d);
        REQUIRE(col.has_value());
        SignedCyclicGraph t1 = tait_graph(d, *col);
        SignedCyclicGraph t2 = tait_graph(d, col->complemented());
        // F[G](A,B,d) = F[G*](B,A,d) for the sign-preserving dual
        // G* = flip_signs(other Tait graph).
        CHECK(f_expansion(t1) == f_expansion(flip_signs(t2)).swapped_ab());
        for (int e = 0; e < t1.edge_count(); ++e) {
            CHECK(t1.edge(e).sign == -t2.edge(e).sign);
        }
    }
}

TEST_CASE("tait graph of the trefoil") {
    VirtualDiagram t = fixtures::trefoil();
    auto col = checkerboard_colorable(t);
    REQUIRE(col.has_value());
    SignedCyclicGraph g = tait_graph(t, *col);
    CHECK(g.edge_count() == 3);
    // Uniform signs: a triangle or its dual three-dipole.
    CHECK(g.edge(0).sign == g.edge(1).sign);
    CHECK(g.edge(1).sign == g.edge(2).sign);
    CHECK(f_expansion(g) == bracket(t));
}

TEST_CASE("tait graph of the unknot is a single vertex") {
    auto col = checkerboard_colorable(fixtures::unknot());
    REQUIRE(col.has_value());
    SignedCyclicGraph g = tait_graph(fixtures::unknot(), *col);
    CHECK(g.same_as(SignedCyclicGraph::isolated_vertices(1)));
}

TEST_CASE("tait rejects an improper coloring") {
    VirtualDiagram t = fixtures::trefoil();
    auto col = checkerboard_colorable(t);
    REQUIRE(col.has_value());
    Coloring bad = *col;
    bad.black.assign(bad.black.size(), 1);
    CHECK_THROWS_AS(tait_graph(t, bad), std::invalid_argument);
}

TEST_CASE("graphical certificate") {
    auto cert = graphical_certificate(fixtures::trefoil());
    REQUIRE(cert.has_value());
    CHECK(cert->edge_count() == 3);

    CHECK_FALSE(graphical_certificate(fixtures::virtual_trefoil()).has_value());

    // The virtualized trefoil is graphical: the certificate exists and its
    // polynomial reproduces the unit-Jones diagram's bracket.
    auto vt = graphical_certificate(fixtures::virtualized_trefoil());
    REQUIRE(vt.has_value());
    CHECK(f_expansion(*vt) == bracket(fixtures::virtualized_trefoil()));

    for (int seed = 0; seed < 20; ++seed) {
        SignedCyclicGraph g = random_cyclic_graph(1 + seed % 3, seed % 5, 0.5, 9900 + seed);
        auto [d, map] = medial(g);
        auto c = graphical_certificate(d);
        REQUIRE(c.has_value());
        CHECK(f_expansion(*c) == f_expansion(g));
    }
}
