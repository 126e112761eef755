#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

// Certificate for pattern ⪯ host: disjoint connected branch sets plus one
// witness host edge per pattern edge.
struct MinorEmbedding {
    std::map<int, std::vector<int>> branch_sets;
    std::map<std::pair<int, int>, std::pair<int, int>> edge_witness;
};

nlohmann::ordered_json embedding_to_json(const MinorEmbedding& emb);
MinorEmbedding embedding_from_json(const nlohmann::json& j);

std::optional<MinorEmbedding> find_minor(const Graph& host, const Graph& pattern);
bool has_minor(const Graph& host, const Graph& pattern);

// Checks every embedding invariant directly against host and pattern;
// shares nothing with the search above.
bool verify_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb);

// Ground truth by exhaustive reduction (edge deletion/contraction, vertex
// deletion) with memoization on canonical forms. Hosts capped at 8 vertices.
bool has_minor_oracle(const Graph& host, const Graph& pattern);

// Excluded-minor planarity: no K5 minor and no K_{3,3} minor.
bool is_planar(const Graph& g);

struct ForbiddenEdgeSet {
    Graph graph;
    Graph pattern;
    std::vector<std::pair<int, int>> edges;       // non-edges whose addition yields the pattern
    std::vector<MinorEmbedding> certificates;     // parallel to edges
};

// Exact scan over all non-edges; certificates stored per hit.
ForbiddenEdgeSet forbidden_edges(const Graph& g, const Graph& pattern, int jobs = 1);

}  // namespace minorkit
