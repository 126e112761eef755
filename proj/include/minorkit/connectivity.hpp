#pragma once
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

// A 3-separation: cut = the shared vertices, interiors = the two private sides.
struct Separation {
    std::vector<int> cut;
    std::vector<int> interior1;
    std::vector<int> interior2;
};

// Exact vertex connectivity; complete graphs give n-1. Throws for n < 2.
int vertex_connectivity(const Graph& g);

// All 3-separations up to swapping sides: every separating 3-set, one entry
// per bipartition of the components of G minus the cut.
std::vector<Separation> enumerate_3_separations(const Graph& g);

// 3-connected, at least 5 vertices, and every 3-separation has a side with
// exactly 4 vertices (cut plus a single interior vertex).
bool is_quasi_4_connected(const Graph& g);

// Quasi-4-connected with every 3-separation cut an independent set.
bool is_internally_4_connected(const Graph& g);

bool has_cubic_vertex_in_triangle(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace minorkit
