#pragma once
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/growth.hpp"
#include "minorkit/minor.hpp"

namespace minorkit {

struct ClaimResult {
    std::string id;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string reason;  // empty unless fail/skipped
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
};

nlohmann::ordered_json claim_to_json(const ClaimResult& claim);

// Closure of base under single-edge additions that keep the result free of a
// pattern minor. base must be aw_plus(6) or v8_plus_f(); the base itself is a
// member. Output in canonical order.
std::vector<Graph> compute_class_E(const Graph& base, const Graph& pattern, int jobs = 1);

// One row of the edge-pair tables: adding both edges creates a pattern minor.
// Realized through the crossing-chords construction when some ordering of the
// four endpoints forms a path, plain additions otherwise.
ClaimResult check_forbidden_pair_row(const std::string& id, const Graph& base,
                                     std::pair<int, int> e1, std::pair<int, int> e2,
                                     const Graph& pattern);

// One row of the single-edge tables: every listed edge must lie in
// forbidden_edges(base, pattern); evidence records whether the computed set
// is exactly the listed one.
ClaimResult check_forbidden_edges_row(const std::string& id, const Graph& base,
                                      const std::vector<std::pair<int, int>>& listed,
                                      const Graph& pattern, int jobs = 1);

// Saturation row: every single-edge addition to aw_plus(rim) either has a
// v8e minor or loses internal 4-connectivity.
ClaimResult check_saturation_row(const std::string& id, int rim, int jobs = 1);

std::vector<ClaimResult> check_forbidden_claims(int jobs = 1);

struct NamedDiscovery {
    std::string name;
    Graph graph;
    ClaimResult result;
};

// Derives gamma1 (unique qualifying split of v8_plus_f), gamma2 (unique
// qualifying split of gamma1; cubic; no extension survives), and gamma (the
// unique order-9 survivor grown from cycle_sq(6)). Nothing is hardcoded.
std::vector<NamedDiscovery> discover_gamma(int jobs = 1);

Bounds default_lemma_bounds(const std::string& id);

// id in {"2.1","3.1","4.1","4.2"} or "lemma" prefixed. Runs the bounded
// growth for that statement and matches every survivor against its class.
ClaimResult verify_lemma(const std::string& id, const Bounds& bounds, int jobs = 1);
ClaimResult verify_lemma(const std::string& id, int jobs = 1);

struct Classification {
    std::string bucket;  // ContainsV8e | Planar | Small | ClassE | GammaOrAW | Unmatched
    bool failed = false;
    nlohmann::ordered_json certificate = nlohmann::ordered_json::object();
};

// Buckets an internally-4-connected graph: v8e minor first (embedding
// certificate), else planar, order <= 7, membership in a computed class-E
// set, minor of gamma/gamma2, or an aw_plus graph; anything else is the
// fail-marked bucket.
Classification classify_thm_1_5(const Graph& g);

// V8-freeness rows: line_graph(k33), dw_plus(3..6), aw_plus(6..12 even),
// plus the positive control mobius(4) which contains V8.
std::vector<ClaimResult> cross_check_thm_1_1(int jobs = 1);

}  // namespace minorkit
