#pragma once
#include <string>
#include <vector>

#include "json.hpp"
#include "minorkit/canonical.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/minor.hpp"

namespace minorkit {

enum class KeepFilter { V8eMinorFree, V8MinorFree, Always };

// Accepts "v8e-free"/"v8e-minor-free", "v8-free"/"v8-minor-free", "always".
KeepFilter parse_filter(const std::string& name);
std::string filter_name(KeepFilter keep);

struct Bounds {
    int max_vertices = 0;
    int max_edges = 0;
    int max_stages = 0;
};

struct OpStep {
    enum class Kind { AddEdge, Split };
    Kind kind = Kind::AddEdge;
    int u = -1;
    int v = -1;              // AddEdge: endpoints u,v. Split: v is the split vertex.
    std::vector<int> x, y;   // Split sides (x keeps label v, y becomes the new vertex).
};
using OpTrace = std::vector<OpStep>;

Graph apply_step(const Graph& g, const OpStep& step);
// Replays to the exact labeled graph, not just the isomorphism class.
Graph replay(const Graph& seed, const OpTrace& trace);
nlohmann::ordered_json trace_to_json(const OpTrace& trace);
OpTrace trace_from_json(const nlohmann::json& j);

struct GrowthNode {
    Graph graph;
    CanonicalForm canon;
    OpTrace trace;       // ops from the seed identified by seed_index
    int depth = 0;       // completed stages
    int seed_index = 0;  // position in the deduplicated seed list
};

struct EliminatedEntry {
    Graph graph;
    CanonicalForm canon;
    MinorEmbedding witness;  // embedding of the filter pattern
};

struct GrowthReport {
    std::string seed;
    std::string filter;
    Bounds bounds;
    long long explored = 0;
    std::vector<Graph> seeds;  // deduplicated, canonical order; traces replay from these
    std::vector<GrowthNode> survivors;
    std::vector<EliminatedEntry> eliminated;
    std::vector<CanonicalForm> truncated;
};

nlohmann::ordered_json report_to_json(const GrowthReport& report);

// One representative per isomorphism class of g plus a single non-edge,
// sorted by canonical form.
std::vector<Graph> edge_additions(const Graph& g);

// One representative per class over all valid splits. degree3_only keeps the
// disjoint covers with a side of size exactly 2 (the new vertex is cubic);
// otherwise overlapping covers with both sides >= 2 are included.
std::vector<Graph> vertex_splits(const Graph& g, bool degree3_only = true);

// All internally-4-connected graphs reachable from g by 1..max_ops additions
// or cubic splits; intermediates need not be internally 4-connected.
std::vector<Graph> successors_i4c(const Graph& g, int max_ops);

// Staged closure: each stage applies up to 3 ops to every frontier graph and
// keeps the internally-4-connected results; the filter decides survival.
// Deterministic for any jobs value.
GrowthReport grow(const std::vector<Graph>& seeds, KeepFilter keep, const Bounds& bounds,
                  int jobs = 1, const std::string& seed_label = "");

}  // namespace minorkit
