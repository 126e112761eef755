#include "minorkit/growth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "minorkit/connectivity.hpp"
#include "minorkit/families.hpp"
#include "minorkit/parallel.hpp"

namespace minorkit {

KeepFilter parse_filter(const std::string& name) {
    if (name == "v8e-free" || name == "v8e-minor-free") return KeepFilter::V8eMinorFree;
    if (name == "v8-free" || name == "v8-minor-free") return KeepFilter::V8MinorFree;
    if (name == "always") return KeepFilter::Always;
    throw std::invalid_argument("unknown filter \"" + name + "\"");
}

std::string filter_name(KeepFilter keep) {
    switch (keep) {
        case KeepFilter::V8eMinorFree: return "v8e-minor-free";
        case KeepFilter::V8MinorFree: return "v8-minor-free";
        case KeepFilter::Always: return "always";
    }
    return "";
}

Graph apply_step(const Graph& g, const OpStep& step) {
    if (step.kind == OpStep::Kind::AddEdge) return add_edge(g, step.u, step.v);
    return split_vertex(g, step.v, step.x, step.y);
}

Graph replay(const Graph& seed, const OpTrace& trace) {
    Graph g = seed;
    for (const OpStep& step : trace) g = apply_step(g, step);
    return g;
}

nlohmann::ordered_json trace_to_json(const OpTrace& trace) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OpStep& step : trace) {
        nlohmann::ordered_json j;
        if (step.kind == OpStep::Kind::AddEdge) {
            j["op"] = "add_edge";
            j["u"] = step.u;
            j["v"] = step.v;
        } else {
            j["op"] = "split";
            j["v"] = step.v;
            j["x"] = step.x;
            j["y"] = step.y;
        }
        arr.push_back(j);
    }
    return arr;
}

OpTrace trace_from_json(const nlohmann::json& j) {
    OpTrace trace;
    for (const auto& item : j) {
        OpStep step;
        std::string op = item.at("op").get<std::string>();
        if (op == "add_edge") {
            step.kind = OpStep::Kind::AddEdge;
            step.u = item.at("u").get<int>();
            step.v = item.at("v").get<int>();
        } else if (op == "split") {
            step.kind = OpStep::Kind::Split;
            step.v = item.at("v").get<int>();
            step.x = item.at("x").get<std::vector<int>>();
            step.y = item.at("y").get<std::vector<int>>();
        } else {
            throw std::invalid_argument("unknown op \"" + op + "\" in trace");
        }
        trace.push_back(step);
    }
    return trace;
}

namespace {

struct Candidate {
    Graph graph;
    OpTrace delta;
};

// Children of g under one operation, in a fixed order: edge additions over
// non-edges (lexicographic), then cubic splits (vertex ascending, 2-subsets
// of the neighbor list in pair order).
void for_each_child(const Graph& g, const std::function<void(const Graph&, const OpStep&)>& fn) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            OpStep step;
            step.kind = OpStep::Kind::AddEdge;
            step.u = u;
            step.v = v;
            fn(add_edge(g, u, v), step);
        }
    if (g.n() + 1 > kMaxVertices) return;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 4) continue;
        auto nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                OpStep step;
                step.kind = OpStep::Kind::Split;
                step.v = v;
                step.x = {nb[i], nb[j]};
                for (int k = 0; k < d; ++k)
                    if (k != i && k != j) step.y.push_back(nb[k]);
                fn(split_vertex(g, v, step.x, step.y), step);
            }
    }
}

struct StageOut {
    std::vector<std::pair<CanonicalForm, Candidate>> hits;  // i-4-c, canonical order
    std::vector<CanonicalForm> truncated;                   // over-bounds children
};

// Expands up to max_ops operations below root. Every in-bounds child is
// expanded further regardless of whether it is internally 4-connected.
StageOut expand_stage(const Graph& root, const Bounds& bounds, int max_ops) {
    std::map<CanonicalForm, Candidate> hits;
    std::set<CanonicalForm> truncated;
    std::vector<Candidate> level = {{root, {}}};
    for (int depth = 1; depth <= max_ops; ++depth) {
        std::vector<Candidate> next;
        std::set<CanonicalForm> seen;
        for (const Candidate& parent : level) {
            for_each_child(parent.graph, [&](const Graph& child, const OpStep& step) {
                CanonicalForm canon = canonical_form(child);
                if (child.n() > bounds.max_vertices || child.m() > bounds.max_edges) {
                    truncated.insert(canon);
                    return;
                }
                if (!seen.insert(canon).second) return;
                Candidate cand{child, parent.delta};
                cand.delta.push_back(step);
                if (is_internally_4_connected(child)) hits.emplace(canon, cand);
                if (depth < max_ops) next.push_back(std::move(cand));
            });
        }
        level = std::move(next);
    }
    StageOut out;
    out.hits.assign(hits.begin(), hits.end());
    out.truncated.assign(truncated.begin(), truncated.end());
    return out;
}

Bounds unbounded() { return Bounds{kMaxVertices, kMaxVertices * (kMaxVertices - 1) / 2, 1}; }

}  // namespace

std::vector<Graph> edge_additions(const Graph& g) {
    std::vector<Graph> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.push_back(add_edge(g, u, v));
    return dedup(out);
}

std::vector<Graph> vertex_splits(const Graph& g, bool degree3_only) {
    std::vector<Graph> out;
    if (g.n() + 1 > kMaxVertices) return out;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d < 4) continue;
        auto nb = g.neighbors(v);
        if (degree3_only) {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    std::vector<int> x = {nb[i], nb[j]}, y;
                    for (int k = 0; k < d; ++k)
                        if (k != i && k != j) y.push_back(nb[k]);
                    out.push_back(split_vertex(g, v, x, y));
                }
        } else {
            // each neighbor goes to x, to y, or to both
            std::vector<int> assign(d, 0);
            for (;;) {
                std::vector<int> x, y;
                for (int k = 0; k < d; ++k) {
                    if (assign[k] != 1) x.push_back(nb[k]);
                    if (assign[k] != 0) y.push_back(nb[k]);
                }
                if (x.size() >= 2 && y.size() >= 2) out.push_back(split_vertex(g, v, x, y));
                int k = 0;
                while (k < d && assign[k] == 2) assign[k++] = 0;
                if (k == d) break;
                ++assign[k];
            }
        }
    }
    return dedup(out);
}

std::vector<Graph> successors_i4c(const Graph& g, int max_ops) {
    if (max_ops < 1 || max_ops > 3) throw std::invalid_argument("max_ops must be 1..3");
    if (!is_internally_4_connected(g))
        throw std::invalid_argument("successors_i4c needs an internally 4-connected start");
    StageOut out = expand_stage(g, unbounded(), max_ops);
    std::vector<Graph> result;
    result.reserve(out.hits.size());
    for (auto& [canon, cand] : out.hits) result.push_back(cand.graph);
    return result;
}

GrowthReport grow(const std::vector<Graph>& seeds, KeepFilter keep, const Bounds& bounds,
                  int jobs, const std::string& seed_label) {
    if (bounds.max_vertices <= 0 || bounds.max_edges <= 0 || bounds.max_stages <= 0)
        throw std::invalid_argument("bounds must be positive");
    if (seeds.empty()) throw std::invalid_argument("at least one seed required");

    std::vector<Graph> start = dedup(seeds);
    for (const Graph& s : start)
        if (!is_internally_4_connected(s))
            throw std::invalid_argument("seeds must be internally 4-connected");

    Graph pattern;
    if (keep == KeepFilter::V8eMinorFree) pattern = v8_plus_e();
    if (keep == KeepFilter::V8MinorFree) pattern = wagner();

    GrowthReport report;
    report.filter = filter_name(keep);
    report.bounds = bounds;
    report.seeds = start;
    if (!seed_label.empty()) {
        report.seed = seed_label;
    } else {
        for (std::size_t i = 0; i < start.size(); ++i) {
            if (i) report.seed += ",";
            report.seed += canonical_form(start[i]);
        }
    }

    std::set<CanonicalForm> known;      // survivors + eliminated
    std::set<CanonicalForm> truncated;
    std::vector<GrowthNode> frontier;

    auto classify = [&](const Graph& g) -> std::optional<MinorEmbedding> {
        if (keep == KeepFilter::Always) return std::nullopt;
        return find_minor(g, pattern);
    };

    for (std::size_t i = 0; i < start.size(); ++i) {
        GrowthNode node;
        node.graph = start[i];
        node.canon = canonical_form(start[i]);
        node.depth = 0;
        node.seed_index = static_cast<int>(i);
        known.insert(node.canon);
        if (auto witness = classify(start[i])) {
            report.eliminated.push_back({start[i], node.canon, *witness});
        } else {
            report.survivors.push_back(node);
            frontier.push_back(node);
        }
    }

    for (int stage = 1; stage <= bounds.max_stages && !frontier.empty(); ++stage) {
        auto outs = parallel_map(
            frontier, [&](const GrowthNode& node) { return expand_stage(node.graph, bounds, 3); },
            jobs);

        // Merge in frontier order; first parent to reach a class provides its trace.
        std::vector<GrowthNode> fresh;
        std::set<CanonicalForm> staged;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& [canon, cand] : outs[i].hits) {
                if (known.count(canon) || !staged.insert(canon).second) continue;
                GrowthNode node;
                node.graph = cand.graph;
                node.canon = canon;
                node.trace = frontier[i].trace;
                node.trace.insert(node.trace.end(), cand.delta.begin(), cand.delta.end());
                node.depth = stage;
                node.seed_index = frontier[i].seed_index;
                fresh.push_back(std::move(node));
            }
            for (const CanonicalForm& t : outs[i].truncated) truncated.insert(t);
        }
        std::sort(fresh.begin(), fresh.end(),
                  [](const GrowthNode& a, const GrowthNode& b) { return a.canon < b.canon; });

        auto witnesses = parallel_map(
            fresh, [&](const GrowthNode& node) { return classify(node.graph); }, jobs);

        std::vector<GrowthNode> next;
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            known.insert(fresh[i].canon);
            if (witnesses[i]) {
                report.eliminated.push_back({fresh[i].graph, fresh[i].canon, *witnesses[i]});
            } else {
                report.survivors.push_back(fresh[i]);
                next.push_back(fresh[i]);
            }
        }
        frontier = std::move(next);
    }

    auto by_canon = [](const auto& a, const auto& b) { return a.canon < b.canon; };
    std::sort(report.survivors.begin(), report.survivors.end(), by_canon);
    std::sort(report.eliminated.begin(), report.eliminated.end(), by_canon);
    report.truncated.assign(truncated.begin(), truncated.end());
    report.explored =
        static_cast<long long>(report.survivors.size() + report.eliminated.size());
    return report;
}

nlohmann::ordered_json report_to_json(const GrowthReport& report) {
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["filter"] = report.filter;
    j["bounds"] = {{"max_vertices", report.bounds.max_vertices},
                   {"max_edges", report.bounds.max_edges},
                   {"max_stages", report.bounds.max_stages}};
    j["explored"] = report.explored;
    j["survivors"] = nlohmann::ordered_json::array();
    for (const GrowthNode& node : report.survivors) {
        nlohmann::ordered_json s;
        s["graph6"] = encode_graph6(node.graph);
        s["canonical"] = node.canon;
        s["depth"] = node.depth;
        s["seed_index"] = node.seed_index;
        s["trace"] = trace_to_json(node.trace);
        j["survivors"].push_back(s);
    }
    j["eliminated"] = nlohmann::ordered_json::array();
    for (const EliminatedEntry& e : report.eliminated) {
        nlohmann::ordered_json s;
        // raw labeling, so the witness re-verifies against this exact string
        s["graph6"] = encode_graph6(e.graph);
        s["canonical"] = e.canon;
        s["witness"] = embedding_to_json(e.witness);
        j["eliminated"].push_back(s);
    }
    j["truncated"] = report.truncated;
    return j;
}

}  // namespace minorkit
