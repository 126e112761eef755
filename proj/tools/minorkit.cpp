#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorkit/canonical.hpp"
#include "minorkit/connectivity.hpp"
#include "minorkit/families.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/growth.hpp"
#include "minorkit/minor.hpp"
#include "minorkit/parallel.hpp"
#include "minorkit/verify.hpp"

using nlohmann::ordered_json;

namespace {

struct GraphToken {
    std::string raw, name, param;
    bool family = false;
};

GraphToken parse_token(const std::string& raw) {
    GraphToken t;
    t.raw = raw;
    auto colon = raw.find(':');
    std::string name = colon == std::string::npos ? raw : raw.substr(0, colon);
    std::string param = colon == std::string::npos ? "" : raw.substr(colon + 1);
    if (minorkit::is_family_name(name)) {
        t.name = name;
        t.param = param;
        t.family = true;
    }
    return t;
}

minorkit::Graph load_token(const GraphToken& t) {
    if (t.family) return minorkit::make_family(t.name, t.param);
    std::ifstream in(t.raw);
    if (!in) throw std::invalid_argument("cannot open graph file \"" + t.raw + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    return minorkit::parse_graph_text(ss.str());
}

minorkit::Graph load_graph(const std::string& raw) { return load_token(parse_token(raw)); }

// Presentation labels: 1-based for named families, hubs of the wheel
// families shown as u/v; raw 0-based integers for file inputs.
std::string vertex_label(const GraphToken& t, const minorkit::Graph& g, int v) {
    if (!t.family) return std::to_string(v);
    if (t.name == "aw" || t.name == "aw+" || t.name == "dw" || t.name == "dw+") {
        if (v == g.n() - 2) return "u";
        if (v == g.n() - 1) return "v";
    }
    return std::to_string(v + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minor testing, connectivity analysis, and growth for small graphs"};
    app.require_subcommand(1);
    int jobs = minorkit::default_jobs();

    auto* family_cmd = app.add_subcommand("family", "emit a named family graph");
    std::string fam_name, fam_param, fam_format = "graph6";
    family_cmd->add_option("name", fam_name, "family name")->required();
    family_cmd->add_option("param", fam_param, "family parameter (e.g. 8, or 2,2 for k33ij)");
    family_cmd->add_option("--format", fam_format, "output format")
        ->check(CLI::IsMember({"graph6", "edges", "dot"}));

    auto* minor_cmd = app.add_subcommand("minor", "test pattern <= host");
    std::string minor_host, minor_pattern;
    bool minor_witness = false;
    minor_cmd->add_option("--host", minor_host, "host graph (file or family name)")->required();
    minor_cmd->add_option("--pattern", minor_pattern, "pattern graph")->required();
    minor_cmd->add_flag("--witness", minor_witness, "print the embedding as JSON");

    auto* check_cmd = app.add_subcommand("check", "run a predicate");
    std::string check_kind, check_graph;
    check_cmd->add_option("kind", check_kind, "predicate")
        ->required()
        ->check(CLI::IsMember({"i4c", "q4c", "planar", "connectivity"}));
    check_cmd->add_option("graph", check_graph, "graph (file or family name)")->required();

    auto* forbidden_cmd = app.add_subcommand("forbidden", "compute the forbidden-edge set");
    std::string forb_graph, forb_pattern = "v8e";
    forbidden_cmd->add_option("graph", forb_graph, "graph (file or family name)")->required();
    forbidden_cmd->add_option("--pattern", forb_pattern, "pattern graph");
    forbidden_cmd->add_option("--jobs", jobs, "worker count");

    auto* grow_cmd = app.add_subcommand("grow", "staged growth run");
    std::vector<std::string> grow_seed;
    std::string grow_filter = "v8e-minor-free";
    int grow_mv = 0, grow_me = 0, grow_stages = 0;
    grow_cmd->add_option("--seed", grow_seed, "seed graph(s); repeat or comma-separate")
        ->required();
    grow_cmd->add_option("--filter", grow_filter, "survivor filter");
    grow_cmd->add_option("--max-vertices", grow_mv, "vertex bound")->required();
    grow_cmd->add_option("--max-edges", grow_me, "edge bound")->required();
    grow_cmd->add_option("--stages", grow_stages, "stage bound")->required();
    grow_cmd->add_option("--jobs", jobs, "worker count");

    auto* verify_cmd = app.add_subcommand("verify", "run verification targets");
    std::string verify_target;
    int verify_mv = 0, verify_me = 0, verify_stages = 0;
    verify_cmd->add_option("target", verify_target, "verification target")
        ->required()
        ->check(CLI::IsMember({"lemma2.1", "lemma3.1", "lemma4.1", "lemma4.2", "forbidden",
                               "gamma", "thm1.1", "all"}));
    verify_cmd->add_option("--max-vertices", verify_mv, "vertex bound override (lemma targets)");
    verify_cmd->add_option("--max-edges", verify_me, "edge bound override (lemma targets)");
    verify_cmd->add_option("--stages", verify_stages, "stage bound override (lemma targets)");
    verify_cmd->add_option("--jobs", jobs, "worker count");

    auto* canon_cmd = app.add_subcommand("canon", "print the canonical graph6 form");
    std::string canon_graph;
    canon_cmd->add_option("graph", canon_graph, "graph (file or family name)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*family_cmd) {
            minorkit::Graph g = minorkit::make_family(fam_name, fam_param);
            if (fam_format == "graph6")
                std::cout << minorkit::encode_graph6(g) << "\n";
            else if (fam_format == "edges")
                std::cout << minorkit::to_edge_list(g);
            else
                std::cout << minorkit::to_dot(g);
            return 0;
        }
        if (*minor_cmd) {
            minorkit::Graph host = load_graph(minor_host);
            minorkit::Graph pattern = load_graph(minor_pattern);
            auto emb = minorkit::find_minor(host, pattern);
            std::cout << (emb ? "true" : "false") << "\n";
            if (minor_witness && emb)
                std::cout << minorkit::embedding_to_json(*emb).dump(2) << "\n";
            return emb ? 0 : 1;
        }
        if (*check_cmd) {
            minorkit::Graph g = load_graph(check_graph);
            if (check_kind == "connectivity") {
                std::cout << minorkit::vertex_connectivity(g) << "\n";
                return 0;
            }
            bool value = false;
            if (check_kind == "i4c") value = minorkit::is_internally_4_connected(g);
            if (check_kind == "q4c") value = minorkit::is_quasi_4_connected(g);
            if (check_kind == "planar") value = minorkit::is_planar(g);
            std::cout << (value ? "true" : "false") << "\n";
            return value ? 0 : 1;
        }
        if (*forbidden_cmd) {
            GraphToken token = parse_token(forb_graph);
            minorkit::Graph g = load_token(token);
            minorkit::Graph pattern = load_graph(forb_pattern);
            minorkit::ForbiddenEdgeSet fes = minorkit::forbidden_edges(g, pattern, jobs);
            ordered_json j;
            j["graph"] = forb_graph;
            j["graph6"] = minorkit::encode_graph6(g);
            j["pattern"] = forb_pattern;
            j["labels"] = token.family ? "paper-1-based" : "storage-0-based";
            j["count"] = fes.edges.size();
            j["edges"] = ordered_json::array();
            for (auto [u, v] : fes.edges)
                j["edges"].push_back({vertex_label(token, g, u), vertex_label(token, g, v)});
            j["certificates"] = ordered_json::array();
            for (const auto& emb : fes.certificates)
                j["certificates"].push_back(minorkit::embedding_to_json(emb));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*grow_cmd) {
            std::vector<minorkit::Graph> seeds;
            std::string label;
            for (const std::string& raw : grow_seed) {
                // k33ij's parameter carries a comma; don't split it apart
                auto tokens = raw.find("k33ij:") != std::string::npos
                                  ? std::vector<std::string>{raw}
                                  : split_commas(raw);
                for (const std::string& tok : tokens) {
                    seeds.push_back(load_graph(tok));
                    if (!label.empty()) label += ",";
                    label += tok;
                }
            }
            minorkit::KeepFilter keep = minorkit::parse_filter(grow_filter);
            minorkit::Bounds bounds{grow_mv, grow_me, grow_stages};
            minorkit::GrowthReport report = minorkit::grow(seeds, keep, bounds, jobs, label);
            std::cout << minorkit::report_to_json(report).dump(2) << "\n";
            return 0;
        }
        if (*verify_cmd) {
            std::vector<minorkit::ClaimResult> claims;
            auto lemma_bounds = [&](const std::string& id) {
                minorkit::Bounds b = minorkit::default_lemma_bounds(id);
                if (verify_mv > 0) b.max_vertices = verify_mv;
                if (verify_me > 0) b.max_edges = verify_me;
                if (verify_stages > 0) b.max_stages = verify_stages;
                return b;
            };
            auto run_lemma = [&](const std::string& id) {
                claims.push_back(minorkit::verify_lemma(id, lemma_bounds(id), jobs));
            };
            if (verify_target.rfind("lemma", 0) == 0) {
                run_lemma(verify_target);
            } else if (verify_target == "forbidden") {
                claims = minorkit::check_forbidden_claims(jobs);
            } else if (verify_target == "gamma") {
                for (auto& d : minorkit::discover_gamma(jobs)) claims.push_back(d.result);
            } else if (verify_target == "thm1.1") {
                claims = minorkit::cross_check_thm_1_1(jobs);
            } else {  // all
                run_lemma("lemma2.1");
                run_lemma("lemma3.1");
                run_lemma("lemma4.1");
                run_lemma("lemma4.2");
                for (auto& c : minorkit::check_forbidden_claims(jobs)) claims.push_back(c);
                for (auto& d : minorkit::discover_gamma(jobs)) claims.push_back(d.result);
                for (auto& c : minorkit::cross_check_thm_1_1(jobs)) claims.push_back(c);
            }
            ordered_json arr = ordered_json::array();
            bool all_pass = true;
            for (const auto& c : claims) {
                arr.push_back(minorkit::claim_to_json(c));
                if (c.status == "fail") all_pass = false;
            }
            std::cout << arr.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
        if (*canon_cmd) {
            std::cout << minorkit::canonical_form(load_graph(canon_graph)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
