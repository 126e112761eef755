#include "minorkit/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>

#include "minorkit/canonical.hpp"
#include "minorkit/parallel.hpp"

namespace minorkit {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// ---- rooted minor search ----
//
// Branch sets are built one pattern vertex at a time, most-constrained first.
// Candidates for a vertex are the connected subsets of the unused host
// vertices, enumerated exactly once each (seed = minimum vertex, pivot-ban
// on siblings). Prunes: adjacency to every placed neighbour, enough distinct
// boundary vertices for the unplaced neighbours, and enough host vertices
// left over for the remaining branch sets.

struct MinorSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;    // pattern vertices in placement order
    std::vector<int> pos_of;   // pattern vertex -> order position
    std::vector<std::uint64_t> branch;
    std::uint64_t all = 0;
    std::uint64_t used = 0;
    int spare = 0;             // host vertices reserved for isolated pattern vertices

    // scratch per depth
    std::vector<std::vector<std::uint64_t>> need;
    std::vector<int> unplaced;

    MinorSearch(const Graph& h, const Graph& p, int spare_count)
        : host(h), pat(p), spare(spare_count) {
        all = host.vertex_mask();
        int n = pat.n();
        pos_of.assign(n, -1);
        order.reserve(n);
        // first: max degree, then most placed neighbours / higher degree / lower label
        int first = 0;
        for (int v = 1; v < n; ++v)
            if (pat.degree(v) > pat.degree(first)) first = v;
        order.push_back(first);
        pos_of[first] = 0;
        while (static_cast<int>(order.size()) < n) {
            int best = -1, best_anchored = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (pos_of[v] >= 0) continue;
                int anchored = 0;
                for (int q : pat.neighbors(v))
                    if (pos_of[q] >= 0) ++anchored;
                int d = pat.degree(v);
                if (anchored > best_anchored ||
                    (anchored == best_anchored && d > best_deg)) {
                    best = v;
                    best_anchored = anchored;
                    best_deg = d;
                }
            }
            pos_of[best] = static_cast<int>(order.size());
            order.push_back(best);
        }
        branch.assign(n, 0);
        need.resize(n);
        unplaced.assign(n, 0);
    }

    bool accept(int k, std::uint64_t s, std::uint64_t nbs) {
        for (std::uint64_t b : need[k])
            if (!(nbs & b)) return false;
        std::uint64_t free_after = all & ~used & ~s;
        if (std::popcount(nbs & free_after) < unplaced[k]) return false;
        branch[k] = s;
        used |= s;
        if (solve(k + 1)) return true;
        used &= ~s;
        return false;
    }

    bool grow(int k, std::uint64_t s, std::uint64_t nbs, std::uint64_t ext,
              std::uint64_t ban, std::uint64_t free, int max_size) {
        if (accept(k, s, nbs)) return true;
        if (std::popcount(s) >= max_size) return false;
        std::uint64_t e = ext;
        while (e) {
            std::uint64_t vb = e & (~e + 1);
            int v = std::countr_zero(vb);
            e &= e - 1;
            std::uint64_t s2 = s | vb;
            std::uint64_t ext2 = (e | (host.row(v) & free)) & ~ban & ~s2;
            if (grow(k, s2, nbs | host.row(v), ext2, ban, free, max_size)) return true;
            ban |= vb;
        }
        return false;
    }

    bool solve(int k) {
        int total = static_cast<int>(order.size());
        if (k == total) return true;
        int p = order[k];
        need[k].clear();
        unplaced[k] = 0;
        for (int q : pat.neighbors(p)) {
            int pq = pos_of[q];
            if (pq < k)
                need[k].push_back(branch[pq]);
            else
                ++unplaced[k];
        }
        std::uint64_t free = all & ~used;
        int max_size = std::popcount(free) - (total - k - 1) - spare;
        if (max_size <= 0) return false;
        std::uint64_t seedban = 0;
        std::uint64_t seeds = free;
        while (seeds) {
            std::uint64_t sb = seeds & (~seeds + 1);
            int sv = std::countr_zero(sb);
            seeds &= seeds - 1;
            if (grow(k, sb, host.row(sv), host.row(sv) & free & ~seedban & ~sb,
                     seedban, free, max_size))
                return true;
            seedban |= sb;
        }
        return false;
    }
};

std::vector<int> mask_to_vec(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Graph local_complete(int n) {
    Graph g = empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = add_edge(g, u, v);
    return g;
}

Graph local_k33() {
    Graph g = empty(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) g = add_edge(g, u, v);
    return g;
}

}  // namespace

std::optional<MinorEmbedding> find_minor(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n() || pattern.m() > host.m()) return std::nullopt;

    // Strip isolated pattern vertices; they only need leftover host vertices.
    std::vector<int> keep;
    for (int v = 0; v < pattern.n(); ++v)
        if (pattern.degree(v) > 0) keep.push_back(v);
    int iso = pattern.n() - static_cast<int>(keep.size());

    MinorEmbedding emb;
    std::uint64_t taken = 0;
    if (!keep.empty()) {
        std::vector<int> to_stripped(pattern.n(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) to_stripped[keep[i]] = static_cast<int>(i);
        Graph pat = empty(static_cast<int>(keep.size()));
        for (auto [u, v] : pattern.edges()) pat = add_edge(pat, to_stripped[u], to_stripped[v]);

        MinorSearch search(host, pat, iso);
        if (!search.solve(0)) return std::nullopt;
        for (int i = 0; i < pat.n(); ++i) {
            std::uint64_t s = search.branch[search.pos_of[i]];
            emb.branch_sets[keep[i]] = mask_to_vec(s);
            taken |= s;
        }
    }
    // Isolated pattern vertices take the smallest unused host vertices.
    for (int v = 0; v < pattern.n(); ++v) {
        if (pattern.degree(v) > 0) continue;
        std::uint64_t free = host.vertex_mask() & ~taken;
        int h = std::countr_zero(free & (~free + 1));
        taken |= bit(h);
        emb.branch_sets[v] = {h};
    }
    // Lexicographically least witness per pattern edge.
    for (auto [a, b] : pattern.edges()) {
        bool done = false;
        for (int u : emb.branch_sets[a]) {
            for (int v : emb.branch_sets[b]) {
                if (host.has_edge(u, v)) {
                    emb.edge_witness[{a, b}] = {u, v};
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
    }
    return emb;
}

bool has_minor(const Graph& host, const Graph& pattern) {
    return find_minor(host, pattern).has_value();
}

bool verify_embedding(const Graph& host, const Graph& pattern, const MinorEmbedding& emb) {
    if (static_cast<int>(emb.branch_sets.size()) != pattern.n()) return false;
    std::uint64_t seen = 0;
    for (const auto& [pv, verts] : emb.branch_sets) {
        if (pv < 0 || pv >= pattern.n()) return false;
        if (verts.empty()) return false;
        std::uint64_t s = 0;
        for (int h : verts) {
            if (h < 0 || h >= host.n()) return false;
            if (s & bit(h)) return false;  // repeat inside one set
            s |= bit(h);
        }
        if (seen & s) return false;  // sets overlap
        seen |= s;
        // connectivity of the induced subgraph
        std::uint64_t reach = s & (~s + 1);
        for (;;) {
            std::uint64_t frontier = 0;
            std::uint64_t r = reach;
            while (r) {
                int v = std::countr_zero(r);
                r &= r - 1;
                frontier |= host.row(v) & s;
            }
            std::uint64_t next = reach | frontier;
            if (next == reach) break;
            reach = next;
        }
        if (reach != s) return false;
    }
    // exactly one witness per pattern edge, no extras
    auto pedges = pattern.edges();
    if (emb.edge_witness.size() != pedges.size()) return false;
    for (auto [a, b] : pedges) {
        auto it = emb.edge_witness.find({a, b});
        if (it == emb.edge_witness.end()) return false;
        auto [u, v] = it->second;
        if (u < 0 || u >= host.n() || v < 0 || v >= host.n()) return false;
        if (!host.has_edge(u, v)) return false;
        const auto& ba = emb.branch_sets.at(a);
        const auto& bb = emb.branch_sets.at(b);
        if (std::find(ba.begin(), ba.end(), u) == ba.end()) return false;
        if (std::find(bb.begin(), bb.end(), v) == bb.end()) return false;
    }
    return true;
}

// ---- exhaustive oracle ----
//
// The reachable minor classes of small hosts form a DAG under single
// reductions. Children lists are cached per canonical form, so each class is
// expanded once per process; individual queries are DFS over that DAG.

namespace {

struct OracleCache {
    std::mutex mu;
    std::map<std::string, std::vector<std::string>> kids;
};

OracleCache& oracle_cache() {
    static OracleCache c;
    return c;
}

const std::vector<std::string>& oracle_children(const std::string& canon) {
    OracleCache& c = oracle_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.kids.find(canon);
    if (it != c.kids.end()) return it->second;
    Graph g = decode_graph6(canon);
    std::set<std::string> out;
    for (auto [u, v] : g.edges()) {
        out.insert(canonical_form(delete_edge(g, u, v)));
        out.insert(canonical_form(contract_edge(g, u, v)));
    }
    for (int v = 0; v < g.n(); ++v) out.insert(canonical_form(delete_vertex(g, v)));
    auto& slot = c.kids[canon];
    slot.assign(out.begin(), out.end());
    return slot;
}

bool oracle_dfs(const std::string& h, int hn, int hm, const std::string& p, int pn, int pm,
                std::set<std::string>& visited) {
    if (h == p) return true;
    if (hn <= pn && hm <= pm) return false;  // can only shrink from here
    if (!visited.insert(h).second) return false;
    for (const std::string& child : oracle_children(h)) {
        Graph cg = decode_graph6(child);
        if (cg.n() < pn || cg.m() < pm) continue;
        if (oracle_dfs(child, cg.n(), cg.m(), p, pn, pm, visited)) return true;
    }
    return false;
}

}  // namespace

bool has_minor_oracle(const Graph& host, const Graph& pattern) {
    if (host.n() > 8) throw std::invalid_argument("oracle handles hosts with at most 8 vertices");
    if (pattern.n() > host.n() || pattern.m() > host.m()) return false;
    std::set<std::string> visited;
    return oracle_dfs(canonical_form(host), host.n(), host.m(),
                      canonical_form(pattern), pattern.n(), pattern.m(), visited);
}

bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    if (g.m() > 3 * g.n() - 6) return false;
    static const Graph k5 = local_complete(5);
    static const Graph k33 = local_k33();
    return !has_minor(g, k5) && !has_minor(g, k33);
}

ForbiddenEdgeSet forbidden_edges(const Graph& g, const Graph& pattern, int jobs) {
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) non_edges.push_back({u, v});

    auto probe = [&](const std::pair<int, int>& e) {
        return find_minor(add_edge(g, e.first, e.second), pattern);
    };
    auto results = parallel_map(non_edges, probe, jobs);

    ForbiddenEdgeSet out;
    out.graph = g;
    out.pattern = pattern;
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
        if (results[i]) {
            out.edges.push_back(non_edges[i]);
            out.certificates.push_back(*results[i]);
        }
    }
    return out;
}

// ---- JSON ----

nlohmann::ordered_json embedding_to_json(const MinorEmbedding& emb) {
    nlohmann::ordered_json j;
    j["branch_sets"] = nlohmann::ordered_json::object();
    for (const auto& [pv, verts] : emb.branch_sets) j["branch_sets"][std::to_string(pv)] = verts;
    j["witnesses"] = nlohmann::ordered_json::object();
    for (const auto& [pe, he] : emb.edge_witness) {
        std::string key = std::to_string(pe.first) + "-" + std::to_string(pe.second);
        j["witnesses"][key] = {he.first, he.second};
    }
    return j;
}

MinorEmbedding embedding_from_json(const nlohmann::json& j) {
    MinorEmbedding emb;
    if (!j.is_object() || !j.contains("branch_sets") || !j.contains("witnesses"))
        throw std::invalid_argument("embedding json needs branch_sets and witnesses");
    for (const auto& [key, val] : j.at("branch_sets").items())
        emb.branch_sets[std::stoi(key)] = val.get<std::vector<int>>();
    for (const auto& [key, val] : j.at("witnesses").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("witness key must be \"a-b\"");
        int a = std::stoi(key.substr(0, dash));
        int b = std::stoi(key.substr(dash + 1));
        auto pairv = val.get<std::vector<int>>();
        if (pairv.size() != 2) throw std::invalid_argument("witness value must be a pair");
        emb.edge_witness[{a, b}] = {pairv[0], pairv[1]};
    }
    return emb;
}

}  // namespace minorkit
