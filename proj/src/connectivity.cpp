#include "minorkit/connectivity.hpp"

#include <bit>
#include <stdexcept>

namespace minorkit {

namespace {

// connected components of the subgraph induced by `alive`, each as a mask,
// ordered by smallest member
std::vector<std::uint64_t> components(const Graph& g, std::uint64_t alive) {
    std::vector<std::uint64_t> comps;
    std::uint64_t left = alive;
    while (left) {
        std::uint64_t comp = left & -left;
        for (;;) {
            std::uint64_t grow = comp;
            std::uint64_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= g.row(v) & alive;
            }
            if (grow == comp) break;
            comp = grow;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

std::vector<int> mask_to_vec(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

bool disconnects(const Graph& g, std::uint64_t cut) {
    std::uint64_t alive = g.vertex_mask() & ~cut;
    if (!alive) return false;
    return components(g, alive).size() > 1;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components(g, g.vertex_mask()).size() == 1;
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("connectivity needs at least 2 vertices");
    if (g.m() == n * (n - 1) / 2) return n - 1;
    if (!is_connected(g)) return 0;
    // exhaust cut candidates by size; n is small throughout this project
    std::vector<int> subset;
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t cut = 0;
            for (int i : idx) cut |= 1ull << i;
            if (disconnects(g, cut)) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n - 1;
}

std::vector<Separation> enumerate_3_separations(const Graph& g) {
    std::vector<Separation> out;
    int n = g.n();
    if (n < 5) return out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::uint64_t cut = (1ull << a) | (1ull << b) | (1ull << c);
                std::uint64_t alive = g.vertex_mask() & ~cut;
                if (!alive) continue;
                auto comps = components(g, alive);
                if (comps.size() < 2) continue;
                int extra = static_cast<int>(comps.size()) - 1;
                // component 0 stays on side 1; others assigned both ways
                for (std::uint64_t pick = 0; pick + 1 < (1ull << extra); ++pick) {
                    std::uint64_t side1 = comps[0];
                    std::uint64_t side2 = 0;
                    for (int j = 0; j < extra; ++j) {
                        if ((pick >> j) & 1)
                            side1 |= comps[j + 1];
                        else
                            side2 |= comps[j + 1];
                    }
                    out.push_back({{a, b, c}, mask_to_vec(side1), mask_to_vec(side2)});
                }
            }
    return out;
}

bool is_quasi_4_connected(const Graph& g) {
    if (g.n() < 5) return false;
    if (vertex_connectivity(g) < 3) return false;
    for (const Separation& s : enumerate_3_separations(g))
        if (s.interior1.size() != 1 && s.interior2.size() != 1) return false;
    return true;
}

bool is_internally_4_connected(const Graph& g) {
    if (g.n() < 5) return false;
    if (has_cubic_vertex_in_triangle(g)) return false;  // its neighborhood is a dependent 3-cut
    if (vertex_connectivity(g) < 3) return false;
    for (const Separation& s : enumerate_3_separations(g)) {
        if (s.interior1.size() != 1 && s.interior2.size() != 1) return false;
        if (g.has_edge(s.cut[0], s.cut[1]) || g.has_edge(s.cut[0], s.cut[2]) ||
            g.has_edge(s.cut[1], s.cut[2]))
            return false;
    }
    return true;
}

bool has_cubic_vertex_in_triangle(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 3) continue;
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) return true;
    }
    return false;
}

}  // namespace minorkit
