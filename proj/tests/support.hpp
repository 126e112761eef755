#pragma once
#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

// Shared test helpers: brute-force oracles that deliberately avoid the
// library's own algorithms, plus seeded random generators.

namespace testsupport {

inline minorkit::Graph relabel(const minorkit::Graph& g, const std::vector<int>& perm) {
    minorkit::Graph h(g.n());
    for (auto [u, v] : g.edges()) h.set_edge(perm[u], perm[v], true);
    return h;
}

// Minimum graph6 string over all vertex orderings. Factorial; keep n <= 8.
inline std::string brute_canonical(const minorkit::Graph& g) {
    if (g.n() > 8) throw std::invalid_argument("brute_canonical: too large");
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = minorkit::encode_graph6(relabel(g, perm));
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace detail {

// Unit-capacity max flow on the vertex-split digraph: node v becomes
// v_in = 2v, v_out = 2v+1 with capacity 1 between them, except s and t
// which are uncapped. Augment with DFS one unit at a time.
inline int disjoint_paths(const minorkit::Graph& g, int s, int t) {
    int N = 2 * g.n();
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < g.n(); ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? g.n() : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    int flow = 0;
    for (;;) {
        std::vector<int> prev(N, -1);
        std::vector<int> stack = {2 * s};
        prev[2 * s] = 2 * s;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < N; ++y)
                if (cap[x][y] > 0 && prev[y] == -1) {
                    prev[y] = x;
                    stack.push_back(y);
                }
        }
        if (prev[2 * t + 1] == -1) return flow;
        for (int y = 2 * t + 1; y != 2 * s; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
}

}  // namespace detail

// Menger: connectivity = min over non-adjacent pairs of max disjoint paths.
inline int brute_vertex_connectivity(const minorkit::Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("brute_vertex_connectivity: need n >= 2");
    int best = g.n() - 1;
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t)
            if (!g.has_edge(s, t)) best = std::min(best, detail::disjoint_paths(g, s, t));
    return best;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline minorkit::Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    std::bernoulli_distribution coin(edge_prob);
    minorkit::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.set_edge(u, v, true);
    return g;
}

inline minorkit::Graph random_connected_graph(int n, double edge_prob, std::mt19937& rng) {
    minorkit::Graph g = random_graph(n, edge_prob, rng);
    // spanning path through a random ordering keeps it connected
    std::vector<int> perm = random_permutation(n, rng);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(perm[i], perm[i + 1], true);
    return g;
}

}  // namespace testsupport
