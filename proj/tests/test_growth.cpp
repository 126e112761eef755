#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "minorkit/canonical.hpp"
#include "minorkit/connectivity.hpp"
#include "minorkit/families.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/growth.hpp"
#include "minorkit/minor.hpp"

using namespace minorkit;

TEST_CASE("filter parsing") {
    CHECK(parse_filter("v8e-free") == KeepFilter::V8eMinorFree);
    CHECK(parse_filter("v8e-minor-free") == KeepFilter::V8eMinorFree);
    CHECK(parse_filter("v8-free") == KeepFilter::V8MinorFree);
    CHECK(parse_filter("v8-minor-free") == KeepFilter::V8MinorFree);
    CHECK(parse_filter("always") == KeepFilter::Always);
    CHECK_THROWS_AS(parse_filter("sometimes"), std::invalid_argument);
    CHECK(parse_filter(filter_name(KeepFilter::V8MinorFree)) == KeepFilter::V8MinorFree);
}

TEST_CASE("edge additions are deduplicated isomorphism classes") {
    std::vector<Graph> adds = edge_additions(wagner());
    REQUIRE(adds.size() == 2);  // distance-2 and distance-3 chords
    std::set<std::string> canons;
    for (const Graph& g : adds) canons.insert(canonical_form(g));
    CHECK(canons.count(canonical_form(v8_plus_e())) == 1);
    CHECK(canons.count(canonical_form(v8_plus_f())) == 1);

    CHECK(edge_additions(complete(6)).empty());
    CHECK(edge_additions(cycle_sq(5)).empty());  // K5 in disguise
    // output sorted by canonical form
    for (std::size_t i = 0; i + 1 < adds.size(); ++i)
        CHECK(canonical_form(adds[i]) < canonical_form(adds[i + 1]));
}

TEST_CASE("vertex splits") {
    CHECK(vertex_splits(k33()).empty());     // cubic, nothing to split
    CHECK(vertex_splits(wagner()).empty());

    std::vector<Graph> cubic_splits = vertex_splits(aw_plus(6), true);
    CHECK(cubic_splits.size() == 1);  // hub splits all land in one class
    for (const Graph& s : cubic_splits) {
        CHECK(s.n() == aw_plus(6).n() + 1);
        CHECK(s.m() == aw_plus(6).m() + 1);
    }

    // general splits allow overlap, so they add more edges and more classes
    std::vector<Graph> general = vertex_splits(complete(5), false);
    CHECK(!general.empty());
    std::set<std::string> general_canons;
    for (const Graph& s : general) {
        CHECK(s.n() == 6);
        CHECK(s.m() >= complete(5).m() + 1);
        general_canons.insert(canonical_form(s));
    }
    std::vector<Graph> cubic = vertex_splits(complete(5), true);
    for (const Graph& s : cubic) CHECK(general_canons.count(canonical_form(s)) == 1);
}

TEST_CASE("apply_step and replay") {
    OpStep add{OpStep::Kind::AddEdge, 0, 3, {}, {}};
    Graph g = apply_step(cycle(5), add);
    CHECK(g.has_edge(0, 3));

    OpStep split;
    split.kind = OpStep::Kind::Split;
    split.v = 4;
    split.x = {0, 1};
    split.y = {2, 3};
    Graph w = dw(4);  // hubs 4 and 5 have degree 4
    Graph s = apply_step(w, split);
    CHECK(s == split_vertex(w, 4, {0, 1}, {2, 3}));

    OpTrace trace = {add, split};
    // replay applies in order from the seed
    Graph base = dw(4);
    Graph expect = apply_step(apply_step(base, add), split);
    CHECK(replay(base, trace) == expect);
}

TEST_CASE("trace json round trip") {
    OpStep add{OpStep::Kind::AddEdge, 1, 4, {}, {}};
    OpStep split;
    split.kind = OpStep::Kind::Split;
    split.v = 2;
    split.x = {0, 5};
    split.y = {1, 3};
    OpTrace trace = {add, split};
    OpTrace back = trace_from_json(trace_to_json(trace));
    REQUIRE(back.size() == 2);
    CHECK(back[0].kind == OpStep::Kind::AddEdge);
    CHECK(back[0].u == 1);
    CHECK(back[0].v == 4);
    CHECK(back[1].kind == OpStep::Kind::Split);
    CHECK(back[1].v == 2);
    CHECK(back[1].x == std::vector<int>{0, 5});
    CHECK(back[1].y == std::vector<int>{1, 3});
}

TEST_CASE("successors_i4c") {
    CHECK(successors_i4c(wagner(), 1).empty());  // both one-edge extensions gain a bad triangle
    CHECK(successors_i4c(k33(), 1).empty());     // chord makes a cubic triangle, no splits

    std::vector<Graph> from_oct = successors_i4c(cycle_sq(6), 1);
    CHECK(!from_oct.empty());
    for (const Graph& g : from_oct) CHECK(is_internally_4_connected(g));

    // deeper search finds everything the shallow one does
    std::vector<Graph> deeper = successors_i4c(cycle_sq(6), 2);
    std::set<std::string> deep_canons;
    for (const Graph& g : deeper) deep_canons.insert(canonical_form(g));
    for (const Graph& g : from_oct) CHECK(deep_canons.count(canonical_form(g)) == 1);

    CHECK_THROWS_AS(successors_i4c(v8_plus_e(), 1), std::invalid_argument);  // not i4c
    CHECK_THROWS_AS(successors_i4c(wagner(), 0), std::invalid_argument);
    CHECK_THROWS_AS(successors_i4c(wagner(), 4), std::invalid_argument);
}

TEST_CASE("grow: complete seed saturates immediately") {
    GrowthReport r = grow({k33_ij(3, 3)}, KeepFilter::Always, {6, 15, 1});
    CHECK(r.explored == 1);
    CHECK(r.survivors.size() == 1);
    CHECK(r.eliminated.empty());
    CHECK(r.truncated.size() == 1);  // splitting K6 leaves the vertex bound
    CHECK(r.survivors[0].depth == 0);
    CHECK(r.survivors[0].trace.empty());
    CHECK(r.survivors[0].canon == canonical_form(complete(6)));
}

TEST_CASE("grow: argument validation") {
    CHECK_THROWS_AS(grow({}, KeepFilter::Always, {6, 15, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow({v8_plus_e()}, KeepFilter::Always, {8, 15, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow({wagner()}, KeepFilter::Always, {0, 15, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow({wagner()}, KeepFilter::Always, {8, 15, 0}), std::invalid_argument);
}

TEST_CASE("grow: staged closure from the octahedron") {
    GrowthReport r = grow({cycle_sq(6)}, KeepFilter::V8eMinorFree, {9, 15, 3});
    CHECK(r.explored == 24);
    CHECK(r.survivors.size() == 18);
    CHECK(r.eliminated.size() == 6);
    CHECK(r.explored == static_cast<long long>(r.survivors.size() + r.eliminated.size()));

    int order9 = 0;
    for (const GrowthNode& s : r.survivors) {
        CHECK(is_internally_4_connected(s.graph));
        CHECK_FALSE(has_minor(s.graph, v8_plus_e()));
        CHECK(s.graph.n() <= 9);
        CHECK(s.graph.m() <= 15);
        if (s.graph.n() == 9) ++order9;
        // trace replays from the recorded seed to the exact labeled graph
        Graph again = replay(r.seeds[s.seed_index], s.trace);
        CHECK(again == s.graph);
        CHECK(canonical_form(again) == s.canon);
    }
    CHECK(order9 == 1);

    for (const EliminatedEntry& e : r.eliminated) {
        CHECK(verify_embedding(e.graph, v8_plus_e(), e.witness));
    }

    // canonical order in both lists
    for (std::size_t i = 0; i + 1 < r.survivors.size(); ++i)
        CHECK(r.survivors[i].canon < r.survivors[i + 1].canon);
    for (std::size_t i = 0; i + 1 < r.eliminated.size(); ++i)
        CHECK(r.eliminated[i].canon < r.eliminated[i + 1].canon);
}

TEST_CASE("grow: reports are byte-identical across worker counts") {
    GrowthReport one = grow({cycle_sq(6)}, KeepFilter::V8eMinorFree, {9, 15, 3}, 1);
    GrowthReport four = grow({cycle_sq(6)}, KeepFilter::V8eMinorFree, {9, 15, 3}, 4);
    CHECK(report_to_json(one).dump() == report_to_json(four).dump());
}

TEST_CASE("grow: duplicate seeds collapse") {
    GrowthReport r = grow({wagner(), mobius(4)}, KeepFilter::V8eMinorFree, {8, 12, 1});
    CHECK(r.seeds.size() == 1);
    CHECK(r.explored == 1);
    CHECK(r.survivors.size() == 1);
}

TEST_CASE("report json carries raw graphs for offline witness checks") {
    GrowthReport r = grow({cycle_sq(6)}, KeepFilter::V8eMinorFree, {9, 15, 3});
    nlohmann::ordered_json j = report_to_json(r);
    CHECK(j["seed"].is_string());
    CHECK(j["filter"] == "v8e-minor-free");
    CHECK(j["bounds"]["max_vertices"] == 9);
    CHECK(j["explored"] == 24);
    REQUIRE(j["eliminated"].size() == r.eliminated.size());
    for (std::size_t i = 0; i < r.eliminated.size(); ++i) {
        Graph raw = decode_graph6(j["eliminated"][i]["graph6"].get<std::string>());
        MinorEmbedding w = embedding_from_json(j["eliminated"][i]["witness"]);
        CHECK(verify_embedding(raw, v8_plus_e(), w));
        CHECK(j["eliminated"][i]["canonical"] == r.eliminated[i].canon);
    }
    for (std::size_t i = 0; i < r.survivors.size(); ++i) {
        CHECK(j["survivors"][i]["graph6"] == encode_graph6(r.survivors[i].graph));
        CHECK(j["survivors"][i]["canonical"] == r.survivors[i].canon);
    }
}
