// Command-line front end: compute minimum MEG-sets and certificates,
// inspect monitoring pairs, analyze edge deletions, run the theorem
// verification suites, and generate instances.
//
// Exit status: 0 on success with zero violations, 1 when a verification
// produced violations, 2 on usage/input/budget errors.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "meg/reporting.hpp"

namespace {

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string set_braces(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

std::optional<meg::GenTag> load_tag(const std::string& graph_path) {
    std::ifstream in(graph_path + ".tag.json");
    if (!in) return std::nullopt;
    meg::Json j = meg::Json::parse(in);
    meg::GenTag tag;
    tag.family = j.value("family", "");
    for (auto& [key, val] : j.items()) {
        if (key == "family" || key == "designated" || key == "seed") continue;
        if (val.is_number_integer()) tag.params.emplace_back(key, val.get<long long>());
    }
    if (j.contains("designated"))
        for (auto& e : j["designated"]) tag.designated.emplace_back(e[0].get<int>(), e[1].get<int>());
    return tag;
}

void print_prediction(std::ostream& os, const meg::Prediction& p) {
    switch (p.kind) {
        case meg::PredictionKind::exact: os << "exact " << p.value; break;
        case meg::PredictionKind::interval: os << "interval [" << p.lower << ", " << p.upper << "]"; break;
        default: os << "not-covered"; break;
    }
    os << " [" << p.case_label << "]";
}

int cmd_compute(const std::string& file, int budget, bool json) {
    meg::Graph g = meg::parse_graph(load_file(file));
    meg::SolverOptions opt{budget, true};
    meg::MegCertificate cert = meg::min_meg(g, opt);
    if (json) {
        meg::Json j = meg::certificate_json(g, cert);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "meg=" << cert.size << " set=" << set_braces(cert.vertex_set) << "\n";
    std::cout << "forced=" << set_braces(cert.forced) << "\n";
    std::cout << "components=" << meg::connected_components(g).size()
              << " optimal=" << (cert.optimal ? "true" : "false") << "\n";
    for (const meg::Witness& w : cert.witnesses)
        std::cout << "witness (" << w.edge.a << "," << w.edge.b << "): pair (" << w.u << "," << w.v
                  << ")\n";
    for (const auto& comp : meg::connected_components(g)) {
        meg::Subgraph sub = meg::induced_subgraph(g, comp);
        if (sub.graph.vertex_count() == 2 && sub.graph.edge_count() == 1)
            std::cout << "note: component {" << comp[0] << "," << comp[1]
                      << "} is a single edge; both endpoints are forced vacuously\n";
    }
    return 0;
}

int cmd_monitors(const std::string& file, int u, int v, bool json) {
    meg::Graph g = meg::parse_graph(load_file(file));
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw meg::PreconditionError("need two distinct vertices in range");
    meg::DistanceTable dt = meg::all_pairs(g, /*with_counts=*/true);
    std::vector<meg::EdgeId> monitored;
    if (dt.connected(u, v))
        for (const meg::EdgeId& e : g.edges())
            if (meg::monitors_by_counts(g, dt, u, v, e)) monitored.push_back(e);
    if (json) {
        meg::Json j;
        j["pair"] = meg::Json::array({u, v});
        j["dist"] = dt.connected(u, v) ? meg::Json(dt.dist(u, v)) : meg::Json(nullptr);
        meg::Json arr = meg::Json::array();
        for (const meg::EdgeId& e : monitored) arr.push_back(meg::to_json(e));
        j["monitored"] = arr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!dt.connected(u, v)) {
        std::cout << "pair (" << u << "," << v << ") is disconnected; monitors nothing\n";
        return 0;
    }
    std::cout << "pair (" << u << "," << v << ") dist=" << dt.dist(u, v) << " monitors "
              << monitored.size() << " edge(s)\n";
    for (const meg::EdgeId& e : monitored) std::cout << "  " << e.a << " " << e.b << "\n";
    return 0;
}

int cmd_forced(const std::string& file, bool json) {
    meg::Graph g = meg::parse_graph(load_file(file));
    std::vector<int> forced = meg::forced_vertices(g);
    std::vector<int> excluded = meg::excluded_vertices(g);
    if (json) {
        meg::Json j;
        j["forced"] = forced;
        j["excluded"] = excluded;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "forced=" << set_braces(forced) << "\n";
    std::cout << "excluded=" << set_braces(excluded) << "\n";
    return 0;
}

int cmd_delete(const std::string& file, int a, int b, int budget, bool json) {
    meg::Graph g = meg::parse_graph(load_file(file));
    meg::EdgeId e(a, b);
    meg::SolverOptions opt{budget, true};
    std::optional<meg::GenTag> tag = load_tag(file);
    auto t0 = std::chrono::steady_clock::now();
    meg::DeletionReport r =
        meg::analyze_deletion(g, e, file, opt, tag ? &*tag : nullptr);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (json) {
        std::cout << meg::to_json(r).dump(2) << "\n";
    } else {
        std::cout << "graph: " << r.graph_id << "\n";
        std::cout << "edge: (" << a << "," << b << ")\n";
        std::cout << "meg_before=" << r.meg_before << "\n";
        if (r.meg_after) std::cout << "meg_after=" << *r.meg_after << "\n";
        else std::cout << "meg_after=skipped (budget)\n";
        std::cout << "prediction: ";
        print_prediction(std::cout, r.prediction);
        std::cout << "\nverdict: " << meg::to_string(r.verdict) << "\n";
        std::cout << "time: " << r.wall_ms << "ms\n";
    }
    return r.verdict == meg::Verdict::violation ? 1 : 0;
}

int cmd_bounds(const std::string& file, int a, int b, int budget, bool json) {
    meg::Graph g = meg::parse_graph(load_file(file));
    meg::EdgeId e(a, b);
    if (!g.has_edge(e)) throw meg::PreconditionError("edge not in graph");
    meg::SolverOptions opt{budget, true};
    std::optional<int> after = meg::exact_meg_or_skip(meg::delete_edge(g, e), opt);

    struct Row {
        std::string check;
        meg::Prediction pred;
        meg::Verdict verdict;
    };
    std::vector<Row> rows;
    auto attempt = [&](const std::string& name, auto&& fn) {
        try {
            meg::Prediction p = fn();
            rows.push_back({name, p, meg::judge(p, after)});
        } catch (const meg::PreconditionError&) {
            // bound does not apply to this edge
        }
    };
    attempt("pendant-removal", [&] {
        return meg::check_pendant_removal(g, std::vector<meg::EdgeId>{e}, opt);
    });
    attempt("cut-edge-removal", [&] { return meg::check_cut_edge_removal(g, e, opt); });
    for (int v : {e.a, e.b}) {
        attempt("cut-vertex-incident(v=" + std::to_string(v) + ")",
                [&] { return meg::check_cut_vertex_incident_removal(g, e, v, opt); });
        attempt("simplicial-incident(v=" + std::to_string(v) + ")",
                [&] { return meg::check_simplicial_incident_removal(g, e, v, opt); });
    }

    bool violated = false;
    for (const Row& r : rows) violated |= r.verdict == meg::Verdict::violation;
    if (json) {
        meg::Json j;
        j["graph"] = file;
        j["edge"] = meg::to_json(e);
        j["meg_after"] = after ? meg::Json(*after) : meg::Json(nullptr);
        meg::Json arr = meg::Json::array();
        for (const Row& r : rows) {
            meg::Json row;
            row["check"] = r.check;
            row["prediction"] = meg::to_json(r.pred);
            row["verdict"] = meg::to_string(r.verdict);
            arr.push_back(row);
        }
        j["checks"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        if (after) std::cout << "meg_after=" << *after << "\n";
        else std::cout << "meg_after=skipped (budget)\n";
        if (rows.empty()) std::cout << "no structural bound applies to edge (" << a << "," << b << ")\n";
        for (const Row& r : rows) {
            std::cout << r.check << ": ";
            print_prediction(std::cout, r.pred);
            std::cout << " verdict=" << meg::to_string(r.verdict) << "\n";
        }
    }
    return violated ? 1 : 0;
}

void print_suite_report(const meg::TheoremReport& rep, bool verbose) {
    std::cout << "suite " << rep.id << ": instances=" << rep.instances
              << " matches=" << rep.matches << " within-bounds=" << rep.within_bounds
              << " not-covered=" << rep.not_covered << " skipped=" << rep.skipped
              << " violations=" << rep.violations;
    if (rep.truncated) std::cout << " (truncated by time cap)";
    std::cout << " time=" << rep.wall_seconds << "s\n";
    if (verbose)
        for (const auto& [label, count] : rep.case_counts)
            std::cout << "  case " << label << ": " << count << "\n";
    for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";
}

int cmd_verify(const std::string& id, int trials, std::uint64_t seed, int budget, bool json,
               bool verbose) {
    std::vector<std::string> ids;
    if (id == "all") {
        for (const meg::SuiteInfo& info : meg::suite_registry()) ids.push_back(info.id);
    } else {
        ids.push_back(id);
    }
    int violations = 0;
    meg::Json all = meg::Json::array();
    for (const std::string& sid : ids) {
        meg::TheoremSuiteSpec spec;
        spec.id = sid;
        spec.trials = trials;
        spec.seed = seed;
        spec.budget = budget;
        spec.verbose = verbose;
        meg::TheoremReport rep = meg::run_suite(spec);
        violations += rep.violations;
        if (json) all.push_back(meg::to_json(rep));
        else print_suite_report(rep, verbose);
    }
    if (json) std::cout << (ids.size() == 1 ? all[0] : all).dump(2) << "\n";
    return violations > 0 ? 1 : 0;
}

void list_suites() {
    for (const meg::SuiteInfo& info : meg::suite_registry()) {
        std::cout << info.id;
        for (std::size_t i = info.id.size(); i < 24; ++i) std::cout << ' ';
        if (info.default_trials > 0) std::cout << "trials=" << info.default_trials << "  ";
        else std::cout << "deterministic  ";
        std::cout << info.claim << "\n";
    }
}

int cmd_generate(const std::string& family, const std::vector<long long>& params,
                 std::uint64_t seed, const std::string& out) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw meg::PreconditionError("family '" + family + "' needs " + std::to_string(count) +
                                         " parameter(s)");
    };
    meg::GeneratedGraph gen;
    if (family == "path") { need(1); gen = meg::gen_path(static_cast<int>(params[0])); }
    else if (family == "cycle") { need(1); gen = meg::gen_cycle(static_cast<int>(params[0])); }
    else if (family == "star") { need(1); gen = meg::gen_star(static_cast<int>(params[0])); }
    else if (family == "grid") { need(2); gen = meg::gen_grid(static_cast<int>(params[0]), static_cast<int>(params[1])); }
    else if (family == "perfect-binary-tree") { need(1); gen = meg::gen_perfect_binary_tree(static_cast<int>(params[0])); }
    else if (family == "random-tree") { need(1); gen = meg::gen_random_tree(static_cast<int>(params[0]), seed); }
    else if (family == "random-unicyclic") { need(2); gen = meg::gen_random_unicyclic(static_cast<int>(params[0]), static_cast<int>(params[1]), seed); }
    else if (family == "random-connected") { need(2); gen = meg::gen_random_connected(static_cast<int>(params[0]), static_cast<int>(params[1]), seed); }
    else if (family == "split-counterexample") { need(1); gen = meg::gen_split_counterexample(static_cast<int>(params[0])); }
    else if (family == "extremal-tree") {
        if (params.empty()) throw meg::PreconditionError("extremal-tree needs k [pad sizes...]");
        std::vector<int> pads(params.begin() + 1, params.end());
        gen = meg::gen_extremal_tree(static_cast<int>(params[0]), pads);
    } else {
        throw meg::PreconditionError("unknown family '" + family + "'");
    }

    std::ofstream graph_out(out, std::ios::binary);
    if (!graph_out) throw std::runtime_error("cannot write '" + out + "'");
    graph_out << meg::serialize_graph(gen.graph);
    std::ofstream tag_out(out + ".tag.json", std::ios::binary);
    tag_out << meg::to_json(gen.tag, gen.seed).dump(2) << "\n";
    std::cout << "wrote " << out << " (" << gen.graph.vertex_count() << " vertices, "
              << gen.graph.edge_count() << " edges) and " << out << ".tag.json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monitoring edge-geodetic toolkit"};
    app.require_subcommand(1);

    int budget = 24;
    std::uint64_t seed = 1;
    int trials = 0;
    bool json = false, verbose = false;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for all randomized generation");
    app.add_option("--trials", trials, "instance count for randomized suites");
    app.add_option("--budget", budget, "exact-solver vertex budget per component");
    app.add_flag("--verbose", verbose, "per-case and per-instance detail");

    std::string file, family, out = "graph.txt", suite_id;
    int ua = 0, ub = 0;
    std::vector<long long> params;
    bool list_flag = false;

    auto* compute = app.add_subcommand("compute", "minimum MEG-set with certificate");
    compute->fallthrough();
    compute->add_option("file", file)->required();

    auto* monitors_cmd = app.add_subcommand("monitors", "edges monitored by a vertex pair");
    monitors_cmd->fallthrough();
    monitors_cmd->add_option("file", file)->required();
    monitors_cmd->add_option("u", ua)->required();
    monitors_cmd->add_option("v", ub)->required();

    auto* forced = app.add_subcommand("forced", "forced and excluded vertices");
    forced->fallthrough();
    forced->add_option("file", file)->required();

    auto* del = app.add_subcommand("delete", "analyze a single edge deletion");
    del->fallthrough();
    del->add_option("file", file)->required();
    del->add_option("a", ua)->required();
    del->add_option("b", ub)->required();

    auto* bounds = app.add_subcommand("bounds", "structural removal bounds for an edge");
    bounds->fallthrough();
    bounds->add_option("file", file)->required();
    bounds->add_option("a", ua)->required();
    bounds->add_option("b", ub)->required();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite_id, "suite id, or 'all'");
    verify->add_flag("--list", list_flag, "list registered suites");

    auto* generate = app.add_subcommand("generate", "write a generated instance + tag sidecar");
    generate->fallthrough();
    generate->add_option("family", family)->required();
    generate->add_option("params", params, "family parameters");
    generate->add_option("-o,--out", out, "output path");

    auto* list_cmd = app.add_subcommand("list-suites", "list registered suites");
    list_cmd->fallthrough();
    (void)list_cmd;

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(file, budget, json);
        if (monitors_cmd->parsed()) return cmd_monitors(file, ua, ub, json);
        if (forced->parsed()) return cmd_forced(file, json);
        if (del->parsed()) return cmd_delete(file, ua, ub, budget, json);
        if (bounds->parsed()) return cmd_bounds(file, ua, ub, budget, json);
        if (verify->parsed()) {
            if (list_flag) { list_suites(); return 0; }
            if (suite_id.empty()) throw meg::PreconditionError("verify needs a suite id or --list");
            return cmd_verify(suite_id, trials, seed, budget, json, verbose);
        }
        if (generate->parsed()) return cmd_generate(family, params, seed, out);
        list_suites();
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
