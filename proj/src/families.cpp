#include "minorkit/families.hpp"

#include <map>
#include <stdexcept>

namespace minorkit {

Graph complete(int n) {
    Graph g = empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = add_edge(g, u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = empty(n);
    for (int i = 0; i < n; ++i) g = add_edge(g, i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g = empty(n);
    for (int i = 0; i + 1 < n; ++i) g = add_edge(g, i, i + 1);
    return g;
}

Graph dw(int n) {
    if (n < 3) throw std::invalid_argument("dw needs rim length at least 3");
    Graph g = empty(n + 2);
    for (int i = 0; i < n; ++i) g = add_edge(g, i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        g = add_edge(g, i, n);
        g = add_edge(g, i, n + 1);
    }
    return g;
}

Graph dw_plus(int n) {
    Graph g = dw(n);
    return add_edge(g, n, n + 1);
}

Graph aw(int m) {
    if (m < 6 || m % 2 != 0) throw std::invalid_argument("aw needs an even rim length at least 6");
    Graph g = empty(m + 2);
    for (int i = 0; i < m; ++i) g = add_edge(g, i, (i + 1) % m);
    for (int i = 0; i < m; i += 2) {
        g = add_edge(g, i, m);          // u sees even rim vertices
        g = add_edge(g, i + 1, m + 1);  // v sees odd rim vertices
    }
    return g;
}

Graph aw_plus(int m) {
    Graph g = aw(m);
    return add_edge(g, m, m + 1);
}

Graph ladder(int n) {
    if (n < 3) throw std::invalid_argument("ladder needs rail length at least 3");
    Graph g = empty(2 * n);
    for (int i = 0; i + 1 < n; ++i) {
        g = add_edge(g, i, i + 1);
        g = add_edge(g, n + i, n + i + 1);
    }
    for (int i = 0; i < n; ++i) g = add_edge(g, i, n + i);
    return g;
}

Graph mobius(int n) {
    Graph g = ladder(n);
    g = add_edge(g, n - 1, n);
    return add_edge(g, 0, 2 * n - 1);
}

Graph cycle_sq(int n) {
    if (n < 5) throw std::invalid_argument("cycle_sq needs at least 5 vertices");
    Graph g = cycle(n);
    for (int i = 0; i < n; ++i) g = add_edge(g, i, (i + 2) % n);
    return g;
}

Graph k33() { return k33_ij(0, 0); }

Graph k33_ij(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw std::invalid_argument("k33_ij parameters must be in 0..3");
    Graph g = empty(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g = add_edge(g, u, v);
    static const std::pair<int, int> left[3] = {{0, 1}, {0, 2}, {1, 2}};
    static const std::pair<int, int> right[3] = {{3, 4}, {3, 5}, {4, 5}};
    for (int k = 0; k < i; ++k) g = add_edge(g, left[k].first, left[k].second);
    for (int k = 0; k < j; ++k) g = add_edge(g, right[k].first, right[k].second);
    return g;
}

Graph wagner() {
    Graph g = cycle(8);
    for (int i = 0; i < 4; ++i) g = add_edge(g, i, i + 4);
    return g;
}

Graph v8_plus_e() { return add_edge(wagner(), 0, 3); }
Graph v8_plus_f() { return add_edge(wagner(), 0, 2); }

Graph terrahawk() {
    Graph g = empty(9);
    for (int i = 0; i < 4; ++i) {
        g = add_edge(g, i, (i + 1) % 4);
        g = add_edge(g, 4 + i, 4 + (i + 1) % 4);
        g = add_edge(g, i, i + 4);
        g = add_edge(g, i, 8);
    }
    return g;
}

Graph cube() {
    Graph g = empty(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g = add_edge(g, u, v);
        }
    return g;
}

Graph petersen() {
    Graph g = empty(10);
    for (int i = 0; i < 5; ++i) {
        g = add_edge(g, i, (i + 1) % 5);
        g = add_edge(g, i, i + 5);
        g = add_edge(g, i + 5, ((i + 2) % 5) + 5);
    }
    return g;
}

Graph oct() {
    Graph g = complete(6);
    g = delete_edge(g, 0, 1);
    g = delete_edge(g, 2, 3);
    return delete_edge(g, 4, 5);
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.size() > static_cast<std::size_t>(kMaxVertices))
        throw std::length_error("line graph exceeds the 64-vertex capacity");
    Graph lg = empty(static_cast<int>(es.size()));
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            auto [p, q] = es[a];
            auto [r, s] = es[b];
            if (p == r || p == s || q == r || q == s)
                lg = add_edge(lg, static_cast<int>(a), static_cast<int>(b));
        }
    return lg;
}

Graph add_cross_chords(const Graph& g, int a1, int a2, int a3, int a4) {
    int a[4] = {a1, a2, a3, a4};
    for (int i = 0; i < 4; ++i) {
        if (a[i] < 0 || a[i] >= g.n()) throw std::out_of_range("path vertex out of range");
        for (int j = i + 1; j < 4; ++j)
            if (a[i] == a[j]) throw std::invalid_argument("path vertices must be distinct");
    }
    if (!g.has_edge(a1, a2) || !g.has_edge(a2, a3) || !g.has_edge(a3, a4))
        throw std::invalid_argument("a1-a2-a3-a4 must be a path in the graph");
    if (g.has_edge(a1, a3) || g.has_edge(a2, a4))
        throw std::invalid_argument("cross chords must be absent");
    Graph out = add_edge(g, a1, a3);
    return add_edge(out, a2, a4);
}

// ---- registry ----

namespace {

struct FamilyEntry {
    bool needs_param;
    std::string labeling;
    Graph (*make)(const std::string& param);
};

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": expected an integer, got \"" + s + "\"");
    }
    if (used != s.size()) throw std::invalid_argument(what + ": trailing characters in \"" + s + "\"");
    return v;
}

std::pair<int, int> parse_int_pair(const std::string& s, const std::string& what) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument(what + ": expected \"i,j\", got \"" + s + "\"");
    return {parse_int(s.substr(0, comma), what), parse_int(s.substr(comma + 1), what)};
}

const std::map<std::string, FamilyEntry>& registry() {
    static const std::map<std::string, FamilyEntry> table = {
        {"wagner", {false, "cycle 0..7 plus chords {i,i+4}",
                    [](const std::string&) { return wagner(); }}},
        {"v8e", {false, "wagner plus {0,3}", [](const std::string&) { return v8_plus_e(); }}},
        {"v8f", {false, "wagner plus {0,2}", [](const std::string&) { return v8_plus_f(); }}},
        {"dw", {true, "rim 0..n-1, hubs u=n and v=n+1 see all rim vertices",
                [](const std::string& p) { return dw(parse_int(p, "dw")); }}},
        {"dw+", {true, "dw n plus the hub edge {n,n+1}",
                 [](const std::string& p) { return dw_plus(parse_int(p, "dw+")); }}},
        {"aw", {true, "even rim 0..m-1, hub u=m sees even rim, hub v=m+1 sees odd rim",
                [](const std::string& p) { return aw(parse_int(p, "aw")); }}},
        {"aw+", {true, "aw m plus the hub edge {m,m+1}",
                 [](const std::string& p) { return aw_plus(parse_int(p, "aw+")); }}},
        {"ladder", {true, "top 0..n-1, bottom n..2n-1, rungs {i,n+i}",
                    [](const std::string& p) { return ladder(parse_int(p, "ladder")); }}},
        {"mobius", {true, "ladder n plus {n-1,n} and {0,2n-1}",
                    [](const std::string& p) { return mobius(parse_int(p, "mobius")); }}},
        {"c2", {true, "cycle 0..n-1 plus chords {i,i+2 mod n}",
                [](const std::string& p) { return cycle_sq(parse_int(p, "c2")); }}},
        {"k33", {false, "parts {0,1,2} | {3,4,5}", [](const std::string&) { return k33(); }}},
        {"k33ij", {true, "k33 plus first i edges of (0,1),(0,2),(1,2) and first j of (3,4),(3,5),(4,5)",
                   [](const std::string& p) {
                       auto [i, j] = parse_int_pair(p, "k33ij");
                       return k33_ij(i, j);
                   }}},
        {"terrahawk", {false, "cube faces (0,1,2,3),(4,5,6,7), verticals {i,i+4}, apex 8 on the first face",
                       [](const std::string&) { return terrahawk(); }}},
        {"cube", {false, "labels 0..7, edges between labels differing in one bit",
                  [](const std::string&) { return cube(); }}},
        {"petersen", {false, "outer C5 0..4, spokes {i,i+5}, inner pentagram",
                      [](const std::string&) { return petersen(); }}},
        {"oct", {false, "K6 minus the matching {0,1},{2,3},{4,5}",
                 [](const std::string&) { return oct(); }}},
        {"lk33", {false, "line graph of k33; vertices are k33 edges in ascending order",
                  [](const std::string&) { return line_graph(k33()); }}},
    };
    return table;
}

}  // namespace

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [name, entry] : registry()) out.push_back(name);
    return out;
}

bool is_family_name(const std::string& name) { return registry().count(name) > 0; }

bool family_needs_param(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown family \"" + name + "\"");
    return it->second.needs_param;
}

Graph make_family(const std::string& name, const std::string& param) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown family \"" + name + "\"");
    if (it->second.needs_param && param.empty())
        throw std::invalid_argument("family \"" + name + "\" needs a parameter");
    if (!it->second.needs_param && !param.empty())
        throw std::invalid_argument("family \"" + name + "\" takes no parameter");
    return it->second.make(param);
}

std::string family_labeling(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown family \"" + name + "\"");
    return it->second.labeling;
}

}  // namespace minorkit
