#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "minorkit/canonical.hpp"
#include "minorkit/connectivity.hpp"
#include "minorkit/families.hpp"
#include "minorkit/graph.hpp"

using namespace minorkit;

namespace {

bool simple_and_connected(const Graph& g) { return is_connected(g); }

}  // namespace

TEST_CASE("order and size formulas") {
    for (int n = 3; n <= 10; ++n) {
        CHECK(complete(n).m() == n * (n - 1) / 2);
        CHECK(cycle(n).m() == n);
        CHECK(path(n).m() == n - 1);
        CHECK(dw(n).n() == n + 2);
        CHECK(dw(n).m() == 3 * n);
        CHECK(dw_plus(n).m() == 3 * n + 1);
        CHECK(ladder(n).n() == 2 * n);
        CHECK(ladder(n).m() == 3 * n - 2);
        CHECK(mobius(n).n() == 2 * n);
        CHECK(mobius(n).m() == 3 * n);
        if (n >= 5) CHECK(cycle_sq(n).m() == 2 * n);
        if (n >= 6 && n % 2 == 0) {
            CHECK(aw(n).n() == n + 2);
            CHECK(aw(n).m() == 2 * n);
            CHECK(aw_plus(n).m() == 2 * n + 1);
        }
        CHECK(simple_and_connected(complete(n)));
        CHECK(simple_and_connected(dw_plus(n)));
        CHECK(simple_and_connected(mobius(n)));
    }
    CHECK(k33().n() == 6);
    CHECK(k33().m() == 9);
    CHECK(wagner().n() == 8);
    CHECK(wagner().m() == 12);
    CHECK(v8_plus_e().m() == 13);
    CHECK(v8_plus_f().m() == 13);
    CHECK(terrahawk().n() == 9);
    CHECK(terrahawk().m() == 16);
    CHECK(cube().n() == 8);
    CHECK(cube().m() == 12);
    CHECK(petersen().n() == 10);
    CHECK(petersen().m() == 15);
    CHECK(oct().n() == 6);
    CHECK(oct().m() == 12);
}

TEST_CASE("fixed labelings produce the frozen graph6 strings") {
    CHECK(encode_graph6(wagner()) == "GhdHKc");
    CHECK(encode_graph6(petersen()) == "IheA@GUAo");
    CHECK(v8_plus_e() == add_edge(wagner(), 0, 3));
    CHECK(v8_plus_f() == add_edge(wagner(), 0, 2));
}

TEST_CASE("alternating wheel hub adjacency") {
    Graph a = aw(6);
    int u = 6, v = 7;
    for (int i = 0; i < 6; ++i) {
        CHECK(a.has_edge(u, i) == (i % 2 == 0));
        CHECK(a.has_edge(v, i) == (i % 2 == 1));
    }
    CHECK_FALSE(a.has_edge(u, v));
    CHECK(aw_plus(6).has_edge(u, v));
    CHECK(dw(5).has_edge(5, 0));
    CHECK(dw(5).has_edge(6, 0));
    CHECK_FALSE(dw(5).has_edge(5, 6));
    CHECK(dw_plus(5).has_edge(5, 6));
}

TEST_CASE("k33_ij adds chords inside the parts in the documented order") {
    Graph g = k33_ij(2, 1);
    CHECK(g.m() == 12);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.has_edge(3, 4));
    CHECK_FALSE(g.has_edge(3, 5));
    CHECK(k33_ij(0, 0) == k33());
}

TEST_CASE("the ten k33_ij parameter pairs give exactly ten isomorphism classes") {
    // (i,j) with i <= j would dedup to 10 unordered pairs; swapped parameters
    // are isomorphic, distinct unordered pairs are not
    std::set<std::string> canons;
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) canons.insert(canonical_form(k33_ij(i, j)));
    CHECK(canons.size() == 10);
    CHECK(are_isomorphic(k33_ij(1, 2), k33_ij(2, 1)));
    CHECK(are_isomorphic(k33_ij(3, 0), k33_ij(0, 3)));
    CHECK(are_isomorphic(k33_ij(3, 3), complete(6)));
}

TEST_CASE("line graph") {
    CHECK(are_isomorphic(line_graph(complete(3)), complete(3)));  // self-dual
    CHECK(are_isomorphic(line_graph(cycle(5)), cycle(5)));
    Graph lk33 = line_graph(k33());
    CHECK(lk33.n() == 9);
    CHECK(lk33.m() == 18);
    for (int v = 0; v < lk33.n(); ++v) CHECK(lk33.degree(v) == 4);
    CHECK(line_graph(path(2)).n() == 1);
    CHECK(line_graph(empty(3)).n() == 0);
}

TEST_CASE("add_cross_chords") {
    Graph p = path(4);  // 0-1-2-3
    Graph crossed = add_cross_chords(p, 0, 1, 2, 3);
    CHECK(crossed.m() == 5);  // K4 minus {0,3}
    CHECK(crossed.has_edge(0, 2));
    CHECK(crossed.has_edge(1, 3));

    CHECK_THROWS_AS(add_cross_chords(p, 0, 1, 2, 0), std::invalid_argument);  // repeated
    CHECK_THROWS_AS(add_cross_chords(p, 0, 1, 3, 2), std::invalid_argument);  // not a path
    CHECK_THROWS_AS(add_cross_chords(crossed, 0, 1, 2, 3), std::invalid_argument);  // chord present
    CHECK_THROWS_AS(add_cross_chords(p, 0, 1, 2, 7), std::out_of_range);
}

TEST_CASE("family validation errors") {
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(dw(2), std::invalid_argument);
    CHECK_THROWS_AS(aw(5), std::invalid_argument);   // odd rim
    CHECK_THROWS_AS(aw(4), std::invalid_argument);   // too short
    CHECK_THROWS_AS(ladder(2), std::invalid_argument);
    CHECK_THROWS_AS(cycle_sq(4), std::invalid_argument);
    CHECK_THROWS_AS(k33_ij(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(k33_ij(0, -1), std::invalid_argument);
}

TEST_CASE("registry dispatch") {
    CHECK(is_family_name("wagner"));
    CHECK(is_family_name("aw+"));
    CHECK_FALSE(is_family_name("nonesuch"));
    CHECK_FALSE(family_needs_param("petersen"));
    CHECK(family_needs_param("c2"));

    CHECK(make_family("wagner") == wagner());
    CHECK(make_family("c2", "8") == cycle_sq(8));
    CHECK(make_family("aw+", "6") == aw_plus(6));
    CHECK(make_family("k33ij", "2,1") == k33_ij(2, 1));
    CHECK(make_family("lk33") == line_graph(k33()));

    CHECK_THROWS_AS(make_family("nonesuch"), std::invalid_argument);
    CHECK_THROWS_AS(make_family("c2"), std::invalid_argument);          // missing parameter
    CHECK_THROWS_AS(make_family("wagner", "3"), std::invalid_argument); // unwanted parameter
    CHECK_THROWS_AS(make_family("c2", "x"), std::invalid_argument);
    CHECK_THROWS_AS(make_family("c2", "8 "), std::invalid_argument);    // trailing characters
    CHECK_THROWS_AS(make_family("k33ij", "2"), std::invalid_argument);

    // every listed name constructs with some small parameter
    for (const std::string& name : family_names()) {
        CHECK(is_family_name(name));
        if (!family_needs_param(name)) CHECK(make_family(name).n() > 0);
    }
    CHECK(family_names().size() == 17);
}
