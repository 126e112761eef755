#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minorkit {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 vertices, adjacency kept as bit rows.
// Every operation below returns a new value; inputs are never modified.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const;

    // unchecked fast path; callers validate labels
    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1ull; }
    std::uint64_t row(int v) const { return rows_[v]; }
    std::uint64_t vertex_mask() const;
    int degree(int v) const;

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // ascending lexicographic

    void set_edge(int u, int v, bool present);  // checked; loop and range errors

    bool operator==(const Graph& o) const;
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph empty(int n);
Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
Graph contract_edge(const Graph& g, int u, int v);
Graph split_vertex(const Graph& g, int v, const std::vector<int>& xs, const std::vector<int>& ys);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);
std::string to_dot(const Graph& g);

// Accepts graph6 (optional >>graph6<< header) or edge-list text.
Graph parse_graph_text(const std::string& text);

}  // namespace minorkit
