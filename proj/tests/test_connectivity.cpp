#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "minorkit/connectivity.hpp"
#include "minorkit/families.hpp"
#include "minorkit/graph.hpp"
#include "support.hpp"

using namespace minorkit;

TEST_CASE("vertex connectivity of fixed graphs") {
    CHECK(vertex_connectivity(k33()) == 3);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(wagner()) == 3);
    CHECK(vertex_connectivity(cycle_sq(6)) == 4);
    CHECK(vertex_connectivity(cycle_sq(8)) == 4);
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(complete(2)) == 1);
    CHECK(vertex_connectivity(cycle(6)) == 2);
    CHECK(vertex_connectivity(path(5)) == 1);
    CHECK(vertex_connectivity(ladder(5)) == 2);
    CHECK(vertex_connectivity(cube()) == 3);
    CHECK(vertex_connectivity(terrahawk()) == 3);

    Graph two_parts = add_edge(add_edge(empty(4), 0, 1), 2, 3);
    CHECK(vertex_connectivity(two_parts) == 0);
    CHECK_THROWS_AS(vertex_connectivity(empty(1)), std::invalid_argument);
    CHECK_THROWS_AS(vertex_connectivity(empty(0)), std::invalid_argument);
}

TEST_CASE("vertex connectivity agrees with a max-flow oracle") {
    std::mt19937 rng(11801);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = testsupport::random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
        CHECK(vertex_connectivity(g) == testsupport::brute_vertex_connectivity(g));
    }
}

TEST_CASE("3-separations of the Wagner graph are the 8 neighborhood cuts") {
    auto seps = enumerate_3_separations(wagner());
    CHECK(seps.size() == 8);
    for (const Separation& s : seps) {
        CHECK(s.cut.size() == 3);
        bool singleton = s.interior1.size() == 1 || s.interior2.size() == 1;
        CHECK(singleton);
        int v = s.interior1.size() == 1 ? s.interior1[0] : s.interior2[0];
        // the cut is exactly the neighborhood of the singleton
        auto nb = wagner().neighbors(v);
        CHECK(s.cut == nb);
    }
}

TEST_CASE("3-separations split multi-component remainders both ways") {
    // star with 3 leaves off a triangle core: remove the triangle, 3 isolated
    // leaves left, 2^2 - 1 = 3 bipartitions
    Graph g = empty(6);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    g.set_edge(0, 2, true);
    for (int leaf = 3; leaf < 6; ++leaf) {
        g.set_edge(0, leaf, true);
        g.set_edge(1, leaf, true);
        g.set_edge(2, leaf, true);
    }
    auto seps = enumerate_3_separations(g);
    CHECK(seps.size() == 3);
    for (const Separation& s : seps) CHECK(s.cut == std::vector<int>{0, 1, 2});
}

TEST_CASE("quasi 4-connectivity") {
    // two K4 blocks sharing a triangle: K5 minus one edge
    Graph shared = delete_edge(complete(5), 3, 4);
    CHECK(is_quasi_4_connected(shared));
    CHECK_FALSE(is_internally_4_connected(shared));  // cut {0,1,2} spans edges

    CHECK(is_quasi_4_connected(wagner()));
    CHECK_FALSE(is_quasi_4_connected(complete(4)));   // order below 5
    CHECK_FALSE(is_quasi_4_connected(ladder(5)));     // only 2-connected
    CHECK(is_quasi_4_connected(complete(5)));         // no 3-separations at all
    CHECK(is_quasi_4_connected(v8_plus_e()));
}

TEST_CASE("internal 4-connectivity on the fixed corpus") {
    CHECK(is_internally_4_connected(wagner()));
    CHECK(is_internally_4_connected(cube()));
    CHECK(is_internally_4_connected(aw(6)));
    CHECK(is_internally_4_connected(aw_plus(6)));
    CHECK(is_internally_4_connected(cycle_sq(6)));
    CHECK(is_internally_4_connected(cycle_sq(8)));
    CHECK(is_internally_4_connected(complete(5)));
    CHECK(is_internally_4_connected(complete(6)));
    CHECK(is_internally_4_connected(petersen()));
    CHECK(is_internally_4_connected(terrahawk()));
    CHECK(is_internally_4_connected(k33()));
    CHECK(is_internally_4_connected(line_graph(k33())));

    CHECK_FALSE(is_internally_4_connected(v8_plus_e()));  // cubic rim vertex in a triangle
    CHECK_FALSE(is_internally_4_connected(v8_plus_f()));
    CHECK_FALSE(is_internally_4_connected(complete(4)));
    CHECK_FALSE(is_internally_4_connected(cycle(8)));
}

TEST_CASE("cubic vertex in a triangle") {
    CHECK(has_cubic_vertex_in_triangle(v8_plus_e()));
    CHECK(has_cubic_vertex_in_triangle(v8_plus_f()));
    CHECK(has_cubic_vertex_in_triangle(k33_ij(1, 0)));
    CHECK_FALSE(has_cubic_vertex_in_triangle(wagner()));     // triangle-free
    CHECK_FALSE(has_cubic_vertex_in_triangle(complete(5)));  // triangles but min degree 4
    CHECK_FALSE(has_cubic_vertex_in_triangle(k33()));
}

TEST_CASE("is_connected") {
    CHECK(is_connected(empty(0)));
    CHECK(is_connected(empty(1)));
    CHECK_FALSE(is_connected(empty(2)));
    CHECK(is_connected(path(6)));
    CHECK_FALSE(is_connected(add_edge(add_edge(empty(4), 0, 1), 2, 3)));
}
