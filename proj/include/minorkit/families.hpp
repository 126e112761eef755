#pragma once
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

// Double wheel: rim cycle 0..n-1, hubs u=n and v=n+1 joined to every rim
// vertex. dw_plus adds the hub edge {u,v}.
Graph dw(int n);
Graph dw_plus(int n);

// Alternating double wheel on an even rim 0..m-1: hub u=m sees even rim
// vertices, hub v=m+1 sees odd rim vertices. aw_plus adds {u,v}.
Graph aw(int m);
Graph aw_plus(int m);

// Ladder: top path 0..n-1, bottom path n..2n-1, rungs {i, n+i}.
// Moebius ladder closes both paths with a twist.
Graph ladder(int n);
Graph mobius(int n);

// Square of a cycle: cycle 0..n-1 plus chords {i, i+2 mod n}.
Graph cycle_sq(int n);

// K_{3,3} on parts {0,1,2} | {3,4,5}; k33_ij adds the first i edges of
// (0,1),(0,2),(1,2) inside one part and the first j of (3,4),(3,5),(4,5)
// inside the other.
Graph k33();
Graph k33_ij(int i, int j);

// Cycle 0..7 plus the four long chords {i, i+4}.
Graph wagner();
Graph v8_plus_e();  // wagner + {0,3}
Graph v8_plus_f();  // wagner + {0,2}

// Cube faces (0,1,2,3) and (4,5,6,7), verticals {i, i+4}, apex 8 joined to
// the first face.
Graph terrahawk();

Graph cube();       // 3-bit hypercube, labels 0..7
Graph petersen();   // outer C5 0..4, spokes {i, i+5}, inner pentagram
Graph oct();        // K6 minus the perfect matching {0,1},{2,3},{4,5}

// Vertices are the edges of g in ascending order; adjacency = shared endpoint.
Graph line_graph(const Graph& g);

// Requires host path a1-a2-a3-a4 with chords {a1,a3}, {a2,a4} absent; adds both.
Graph add_cross_chords(const Graph& g, int a1, int a2, int a3, int a4);

// Registry used by the CLI. Parameterized families take a single string
// parameter ("8", or "2,2" for k33ij).
std::vector<std::string> family_names();
bool is_family_name(const std::string& name);
bool family_needs_param(const std::string& name);
Graph make_family(const std::string& name, const std::string& param = "");
std::string family_labeling(const std::string& name);

}  // namespace minorkit
