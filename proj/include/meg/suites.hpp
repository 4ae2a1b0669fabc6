#pragma once

// Named verification suites: each one generates seeded instances for a
// single claim, runs the matching predictor or bound checker against
// the exact solver, and tallies the outcomes. A suite passes when it
// produces zero violations.

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "meg/dynamic.hpp"
#include "meg/generators.hpp"
#include "meg/monitor.hpp"
#include "meg/solver.hpp"

namespace meg {

struct TheoremSuiteSpec {
    std::string id;
    int trials = 0;  // 0 = suite default; deterministic suites ignore it
    std::uint64_t seed = 1;
    int budget = 24;
    double time_cap_seconds = 600.0;
    bool verbose = false;  // keep per-instance reports
};

struct TheoremReport {
    std::string id;
    int instances = 0;
    int matches = 0;
    int within_bounds = 0;
    int not_covered = 0;
    int violations = 0;
    int skipped = 0;  // exact recomputation skipped (budget)
    bool truncated = false;
    double wall_seconds = 0;
    std::map<std::string, int> case_counts;
    std::vector<std::string> notes;
    std::vector<DeletionReport> details;

    bool passed() const { return violations == 0; }
};

struct SuiteInfo {
    std::string id;
    std::string claim;
    int default_trials;
};

inline const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> registry = {
        {"class-formulas",
         "closed-form meg values for paths, cycles, trees and grids agree with the exact solver",
         200},
        {"unicyclic-formula",
         "the unicyclic meg formula agrees with the exact solver across all of its branches", 100},
        {"tree-deletion",
         "deleting one tree edge shifts meg by {-1,0,+1,+2} determined by endpoint degrees", 300},
        {"tree-k-bounds",
         "deleting at most k tree edges keeps meg' in [0, meg+2k], strictly below the top once "
         "k > ceil(|E|/2)-1",
         100},
        {"extremal-construction",
         "the chained-block tree family attains meg+2k exactly when its designated edges go", 6},
        {"grid-deletion",
         "single-edge grid deletion changes meg per the degree/corner/parallel-edge case table", 0},
        {"pendant-bounds", "removing l pendant edges keeps meg' in [meg-l, meg]", 100},
        {"cut-edge-bounds",
         "removing a cut edge with both endpoint degrees >= 2 keeps meg' in [meg, meg+2]", 100},
        {"cut-vertex-bounds", "removing an edge incident to a cut vertex keeps meg' <= meg+2", 100},
        {"simplicial-bounds",
         "removing an edge at a degree-two-or-more simplicial vertex keeps meg' in "
         "[meg-deg, meg+1]",
         100},
        {"forced-vertices",
         "every minimum MEG-set contains all forced, simplicial and pendant vertices and avoids "
         "cut vertices and degree-two-or-more cut-edge endpoints",
         300},
        {"oracle-equivalence",
         "the distance-increase predicate and the path-count predicate agree on every "
         "(pair, edge) combination",
         200},
        {"split-extremal",
         "the clique-plus-two-vertices construction has meg = n and drops below n after one "
         "designated edge deletion",
         0},
    };
    return registry;
}

namespace detail {

class SuiteRun {
public:
    explicit SuiteRun(const TheoremSuiteSpec& spec)
        : spec_(spec), start_(std::chrono::steady_clock::now()) {
        report_.id = spec.id;
    }

    const TheoremSuiteSpec& spec() const { return spec_; }
    SolverOptions solver() const { return SolverOptions{spec_.budget, true}; }

    int trials(int fallback) const { return spec_.trials > 0 ? spec_.trials : fallback; }

    bool out_of_time() {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (elapsed > spec_.time_cap_seconds) {
            report_.truncated = true;
            return true;
        }
        return false;
    }

    void tally(const DeletionReport& r) {
        ++report_.instances;
        switch (r.verdict) {
            case Verdict::match: ++report_.matches; break;
            case Verdict::within_bounds: ++report_.within_bounds; break;
            case Verdict::not_covered: ++report_.not_covered; break;
            case Verdict::violation: ++report_.violations; break;
            case Verdict::skipped_exact: ++report_.skipped; break;
        }
        if (!r.prediction.case_label.empty()) ++report_.case_counts[r.prediction.case_label];
        if (r.verdict == Verdict::violation)
            note("violation on " + r.graph_id + " [" + r.prediction.case_label + "]");
        if (spec_.verbose) report_.details.push_back(r);
    }

    /// Direct equality pin: actual must equal expected.
    void pin(const std::string& graph_id, const std::string& label, int expected, int actual) {
        DeletionReport r;
        r.graph_id = graph_id;
        r.meg_before = expected;
        r.meg_after = actual;
        r.prediction = Prediction::exact_value(expected, label);
        r.verdict = actual == expected ? Verdict::match : Verdict::violation;
        tally(r);
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    TheoremReport finish() {
        report_.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report_;
    }

private:
    TheoremSuiteSpec spec_;
    TheoremReport report_;
    std::chrono::steady_clock::time_point start_;
};

/// Cycle of length k with a random subtree of the given size hung on
/// each listed cycle position.
inline Graph build_unicyclic(int k, const std::vector<std::pair<int, int>>& attachments, Rng& rng) {
    std::vector<EdgeId> edges;
    for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
    int next = k;
    for (auto [pos, size] : attachments) {
        std::vector<int> pool{pos};
        for (int i = 0; i < size; ++i) {
            int parent = pool[rng.below(pool.size())];
            edges.emplace_back(parent, next);
            pool.push_back(next);
            ++next;
        }
    }
    return Graph(next, edges);
}

inline std::string describe(const GenTag& tag, std::uint64_t seed) {
    std::string s = tag.family + "(";
    bool first = true;
    for (const auto& [k, v] : tag.params) {
        if (!first) s += ",";
        s += k + "=" + std::to_string(v);
        first = false;
    }
    if (seed) s += (first ? "" : ",") + std::string("seed=") + std::to_string(seed);
    return s + ")";
}

// --- individual suites -----------------------------------------------------

inline void run_class_formulas(SuiteRun& run) {
    auto opt = run.solver();
    auto compare = [&](const Graph& g, int formula, const std::string& id, const std::string& label) {
        DeletionReport r;
        r.graph_id = id;
        r.prediction = Prediction::exact_value(formula, label);
        int exact = meg_number(g, opt);
        r.meg_before = exact;
        r.meg_after = exact;
        r.verdict = judge(r.prediction, exact);
        run.tally(r);
    };
    for (int n = 2; n <= 20 && !run.out_of_time(); ++n)
        compare(gen_path(n).graph, meg_path(n), "path(n=" + std::to_string(n) + ")", "path");
    for (int n = 3; n <= 20 && !run.out_of_time(); ++n)
        compare(gen_cycle(n).graph, meg_cycle(n), "cycle(n=" + std::to_string(n) + ")", "cycle");
    Rng master(run.spec().seed);
    int trials = run.trials(200);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        int n = master.range(2, 20);
        std::uint64_t s = master.raw();
        auto gen = gen_random_tree(n, s);
        compare(gen.graph, n == 1 ? 0 : leaf_count(gen.graph), describe(gen.tag, s), "tree");
    }
    for (int m = 2; m <= 4; ++m)
        for (int n = m; m * n <= 24; ++n) {
            if (run.out_of_time()) break;
            compare(gen_grid(m, n).graph, meg_grid(m, n),
                    "grid(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")", "grid");
        }
}

inline void run_unicyclic_formula(SuiteRun& run) {
    auto opt = run.solver();
    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        Graph g;
        switch (i % 5) {
            case 0: {  // short cycle, random attachments
                int k = rng.range(3, 4);
                int extras = rng.range(0, 8);
                std::vector<std::pair<int, int>> att;
                if (extras > 0) att.push_back({rng.range(0, k - 1), extras});
                g = build_unicyclic(k, att, rng);
                break;
            }
            case 1:  // bare long cycle
                g = build_unicyclic(rng.range(5, 10), {}, rng);
                break;
            case 2: {  // one branch vertex
                int k = rng.range(5, 10);
                g = build_unicyclic(k, {{rng.range(0, k - 1), rng.range(1, 16 - k)}}, rng);
                break;
            }
            case 3: {  // two branch vertices, adjacent or opposite on an even cycle
                int k = 2 * rng.range(3, 5);
                int first = rng.range(0, k - 1);
                int second = rng.below(2) ? (first + 1) % k : (first + k / 2) % k;
                int budget_left = 16 - k;
                int s1 = rng.range(1, std::max(1, budget_left - 1));
                int s2 = std::max(1, std::min(budget_left - s1, rng.range(1, 3)));
                g = build_unicyclic(k, {{first, s1}, {second, s2}}, rng);
                break;
            }
            default: {  // two branch vertices on an odd cycle: the general branch
                int k = 2 * rng.range(2, 4) + 1;
                int first = rng.range(0, k - 1);
                int second = (first + 2) % k;
                g = build_unicyclic(k, {{first, rng.range(1, 3)}, {second, rng.range(1, 3)}}, rng);
                break;
            }
        }
        UnicyclicProfile prof = unicyclic_profile(g);
        DeletionReport r;
        r.graph_id = "unicyclic(n=" + std::to_string(g.vertex_count()) +
                     ",k=" + std::to_string(prof.k) + ",trial=" + std::to_string(i) + ")";
        r.prediction = Prediction::exact_value(meg_unicyclic(prof), unicyclic_case(prof));
        int exact = meg_number(g, opt);
        r.meg_before = exact;
        r.meg_after = exact;
        r.verdict = judge(r.prediction, exact);
        run.tally(r);
    }
}

inline void run_tree_deletion(SuiteRun& run) {
    auto opt = run.solver();
    Rng master(run.spec().seed);
    int trials = run.trials(300);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        Graph t;
        EdgeId target(0, 1);
        if (i % 2 == 0) {
            switch ((i / 2) % 6) {
                case 0:  // single edge, degrees (1,1)
                    t = gen_path(2).graph;
                    target = EdgeId(0, 1);
                    break;
                case 1: {  // interior path edge, degrees (2,2)
                    int n = rng.range(5, 9);
                    t = gen_path(n).graph;
                    int pos = rng.range(1, n - 3);
                    target = EdgeId(pos, pos + 1);
                    break;
                }
                case 2: {  // star edge, degrees (1,3+)
                    t = gen_star(rng.range(4, 8)).graph;
                    target = EdgeId(0, rng.range(1, t.vertex_count() - 1));
                    break;
                }
                case 3: {  // double star center edge, degrees (3+,3+)
                    int a = rng.range(2, 4), b = rng.range(2, 4);
                    std::vector<EdgeId> edges{{0, 1}};
                    int next = 2;
                    for (int j = 0; j < a; ++j) edges.emplace_back(0, next++);
                    for (int j = 0; j < b; ++j) edges.emplace_back(1, next++);
                    t = Graph(next, edges);
                    target = EdgeId(0, 1);
                    break;
                }
                case 4: {  // spider leg joint, degrees (2,3+)
                    int legs = rng.range(3, 4);
                    std::vector<EdgeId> edges;
                    int next = 1;
                    for (int j = 0; j < legs; ++j) {
                        edges.emplace_back(0, next);
                        edges.emplace_back(next, next + 1);
                        next += 2;
                    }
                    t = Graph(next, edges);
                    target = EdgeId(0, 1);
                    break;
                }
                default: {  // path end edge, degrees (1,2)
                    t = gen_path(rng.range(4, 10)).graph;
                    target = EdgeId(0, 1);
                    break;
                }
            }
        } else {
            std::uint64_t s = rng.raw();
            int n = 2 + static_cast<int>(s % 19);
            t = gen_random_tree(n, s).graph;
            target = t.edges()[rng.below(t.edges().size())];
        }
        DeletionReport r;
        r.graph_id = "tree(n=" + std::to_string(t.vertex_count()) + ",trial=" + std::to_string(i) + ")";
        r.deleted = {target};
        r.meg_before = leaf_count(t);
        r.prediction = predict_tree_deletion(t, target);
        r.meg_after = meg_number(delete_edge(t, target), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

inline void run_tree_k_bounds(SuiteRun& run) {
    auto opt = run.solver();
    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        std::uint64_t s = rng.raw();
        int n = rng.range(3, 20);
        Graph t = gen_random_tree(n, s).graph;
        int k = rng.range(0, t.edge_count());
        std::vector<EdgeId> pool = t.edges();
        for (std::size_t j = pool.size(); j > 1; --j)
            std::swap(pool[j - 1], pool[rng.below(j)]);
        pool.resize(k);
        DeletionReport r;
        r.graph_id = "tree(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                     ",trial=" + std::to_string(i) + ")";
        r.deleted = pool;
        r.meg_before = leaf_count(t);
        r.prediction = tree_k_deletion_bounds(t, k);
        r.meg_after = meg_number(delete_edges(t, pool), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

inline void run_extremal_construction(SuiteRun& run) {
    auto opt = run.solver();
    auto check = [&](int k, std::vector<int> pads) {
        auto gen = gen_extremal_tree(k, std::move(pads));
        int before = meg_number(gen.graph, opt);
        DeletionReport r;
        r.graph_id = describe(gen.tag, 0);
        r.deleted = gen.tag.designated;
        r.meg_before = before;
        r.prediction = Prediction::exact_value(before + 2 * k, "extremal-tree-2k");
        r.meg_after = meg_number(delete_edges(gen.graph, gen.tag.designated), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    };
    for (int k = 1; k <= 4; ++k) {
        if (run.out_of_time()) return;
        check(k, {});
    }
    check(2, {2, 1, 3});
    check(3, {3, 2, 1, 2});
}

inline void run_grid_deletion(SuiteRun& run) {
    auto opt = run.solver();
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}, {3, 3}, {3, 4}, {4, 4}}) {
        if (run.out_of_time()) return;
        auto gen = gen_grid(m, n);
        for (const EdgeId& e : gen.graph.edges()) {
            auto [ra, ca] = grid_coord(m, n, e.a);
            auto [rb, cb] = grid_coord(m, n, e.b);
            std::string id = "grid(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",edge=(" +
                             std::to_string(ra) + "," + std::to_string(ca) + ")-(" +
                             std::to_string(rb) + "," + std::to_string(cb) + "))";
            DeletionReport r = analyze_deletion(gen.graph, e, id, opt, &gen.tag);
            run.tally(r);
            if (r.verdict == Verdict::not_covered && r.meg_after)
                run.note(id + " uncovered; exact=" + std::to_string(*r.meg_after));
        }
    }

    // Pinned instances.
    run.pin("grid(3,3) edge (2,1)-(2,2)", "grid-pin",
            6, predict_grid_deletion(grid_edge_context(3, 3, {2, 1}, {2, 2})).value);
    run.pin("grid(4,4) edge (2,2)-(2,3)", "grid-pin",
            12, predict_grid_deletion(grid_edge_context(4, 4, {2, 2}, {2, 3})).value);
    run.pin("grid(5,5) edge (3,2)-(3,3)", "grid-pin",
            18, predict_grid_deletion(grid_edge_context(5, 5, {3, 2}, {3, 3})).value);
    {
        auto gen = gen_grid(5, 5);
        EdgeId e(grid_index(5, 5, 3, 2), grid_index(5, 5, 3, 3));
        DeletionReport r = analyze_deletion(gen.graph, e, "grid(m=5,n=5,edge=(3,2)-(3,3))", opt,
                                            &gen.tag);
        run.tally(r);
        if (r.verdict == Verdict::skipped_exact)
            run.note("grid(5,5) exact recomputation skipped (25 vertices > budget " +
                     std::to_string(opt.vertex_budget) + "); prediction-only check");
    }
}

/// Connected base graph with extra pendant vertices hung on it.
inline Graph build_with_pendants(Rng& rng, int base_n, int base_m, int pendants) {
    Graph base = gen_random_connected(base_n, base_m, rng.raw()).graph;
    std::vector<EdgeId> edges = base.edges();
    int next = base_n;
    for (int i = 0; i < pendants; ++i) edges.emplace_back(rng.range(0, base_n - 1), next++);
    return Graph(next, edges);
}

inline void run_pendant_bounds(SuiteRun& run) {
    auto opt = run.solver();

    {  // star: removing all pendant edges lands on the lower bound
        Graph star = gen_star(7).graph;
        auto pend = star.edges();
        Prediction bound = check_pendant_removal(star, pend, opt);
        int exact = meg_number(delete_edges(star, pend), opt);
        run.pin("star(7) all pendant edges", "pendant-lower-tight", bound.lower, exact);
    }
    {  // long path: removing both end edges stays at the upper bound
        Graph p7 = gen_path(7).graph;
        std::vector<EdgeId> pend{EdgeId(0, 1), EdgeId(5, 6)};
        Prediction bound = check_pendant_removal(p7, pend, opt);
        int exact = meg_number(delete_edges(p7, pend), opt);
        run.pin("path(7) both end edges", "pendant-upper-tight", bound.upper, exact);
    }
    {  // perfect binary tree: strictly inside the bounds
        Graph t = gen_perfect_binary_tree(3).graph;
        std::vector<EdgeId> pend;
        for (const EdgeId& e : t.edges())
            if (t.degree(e.a) == 1 || t.degree(e.b) == 1) pend.push_back(e);
        Prediction bound = check_pendant_removal(t, pend, opt);
        int exact = meg_number(delete_edges(t, pend), opt);
        run.pin("perfect-binary-tree(h=3) all pendant edges", "pendant-strict-interior", 4, exact);
        if (!(bound.lower < exact && exact < bound.upper))
            run.note("perfect binary tree landed on a bound edge unexpectedly");
    }

    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int base_n = rng.range(4, 12);
        int base_m = rng.range(base_n - 1, std::min(base_n * (base_n - 1) / 2, base_n + 4));
        Graph g = build_with_pendants(rng, base_n, base_m, rng.range(1, 4));
        std::vector<EdgeId> pend;
        for (const EdgeId& e : g.edges())
            if (g.degree(e.a) == 1 || g.degree(e.b) == 1) pend.push_back(e);
        for (std::size_t j = pend.size(); j > 1; --j) std::swap(pend[j - 1], pend[rng.below(j)]);
        pend.resize(rng.range(1, static_cast<int>(pend.size())));
        DeletionReport r;
        r.graph_id = "pendant-trial(" + std::to_string(i) + ")";
        r.deleted = pend;
        r.prediction = check_pendant_removal(g, pend, opt);
        r.meg_before = r.prediction.upper;  // the checker's upper bound is meg(G)
        r.meg_after = meg_number(delete_edges(g, pend), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

/// Two seeded connected blobs joined by one bridge edge.
inline Graph build_bridge_graph(Rng& rng, int& bridge_a, int& bridge_b) {
    int na = rng.range(3, 8), nb = rng.range(3, 8);
    Graph a = gen_random_connected(na, rng.range(na - 1, std::min(na * (na - 1) / 2, na + 3)),
                                   rng.raw()).graph;
    Graph b = gen_random_connected(nb, rng.range(nb - 1, std::min(nb * (nb - 1) / 2, nb + 3)),
                                   rng.raw()).graph;
    std::vector<EdgeId> edges = a.edges();
    for (const EdgeId& e : b.edges()) edges.emplace_back(e.a + na, e.b + na);
    bridge_a = rng.range(0, na - 1);
    bridge_b = na + rng.range(0, nb - 1);
    edges.emplace_back(bridge_a, bridge_b);
    return Graph(na + nb, edges);
}

inline void run_cut_edge_bounds(SuiteRun& run) {
    auto opt = run.solver();

    {  // interior (2,2) path edge: upper bound attained
        Graph h1 = gen_path(8).graph;
        EdgeId e(3, 4);
        Prediction bound = check_cut_edge_removal(h1, e, opt);
        run.pin("path(8) edge (3,4)", "cut-edge-upper-tight", bound.upper,
                meg_number(delete_edge(h1, e), opt));
    }
    {  // double star center edge: lower bound attained
        std::vector<EdgeId> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}};
        Graph h2(8, edges);
        EdgeId e(0, 1);
        Prediction bound = check_cut_edge_removal(h2, e, opt);
        run.pin("double-star(8) center edge", "cut-edge-lower-tight", bound.lower,
                meg_number(delete_edge(h2, e), opt));
    }
    {  // (3,2) tree edge: strictly between
        std::vector<EdgeId> edges{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}};
        Graph h3(7, edges);
        EdgeId e(0, 3);
        run.pin("branched-tree(7) edge (0,3)", "cut-edge-middle",
                meg_number(h3, opt) + 1, meg_number(delete_edge(h3, e), opt));
    }

    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int a = 0, b = 0;
        Graph g = build_bridge_graph(rng, a, b);
        EdgeId bridge(a, b);
        DeletionReport r;
        r.graph_id = "cut-edge-trial(" + std::to_string(i) + ")";
        r.deleted = {bridge};
        r.prediction = check_cut_edge_removal(g, bridge, opt);
        r.meg_before = r.prediction.lower;
        r.meg_after = meg_number(delete_edge(g, bridge), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

/// Two seeded connected blobs sharing one vertex.
inline Graph build_shared_vertex_graph(Rng& rng, int& shared) {
    int na = rng.range(3, 8), nb = rng.range(3, 8);
    Graph a = gen_random_connected(na, rng.range(na - 1, std::min(na * (na - 1) / 2, na + 3)),
                                   rng.raw()).graph;
    Graph b = gen_random_connected(nb, rng.range(nb - 1, std::min(nb * (nb - 1) / 2, nb + 3)),
                                   rng.raw()).graph;
    shared = na - 1;  // b's vertex 0 merges onto a's last vertex
    std::vector<EdgeId> edges = a.edges();
    auto remap = [&](int v) { return v == 0 ? shared : na + v - 1; };
    for (const EdgeId& e : b.edges()) edges.emplace_back(remap(e.a), remap(e.b));
    return Graph(na + nb - 1, edges);
}

inline void run_cut_vertex_bounds(SuiteRun& run) {
    auto opt = run.solver();

    {  // tree edge with both degrees 2, incident to a cut vertex: +2 attained
        Graph p6 = gen_path(6).graph;
        EdgeId e(2, 3);
        Prediction bound = check_cut_vertex_incident_removal(p6, e, 2, opt);
        int exact = meg_number(delete_edge(p6, e), opt);
        run.pin("path(6) edge (2,3) at cut vertex 2", "cut-vertex-upper-tight", bound.upper, exact);
        run.pin("path(6) edge (2,3) exact", "cut-vertex-upper-value", 4, exact);
    }
    {  // pendant edge on a cycle, incident to the attachment cut vertex
        std::vector<EdgeId> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}};
        Graph g(6, edges);
        EdgeId e(0, 5);
        DeletionReport r;
        r.graph_id = "cycle5-plus-pendant";
        r.deleted = {e};
        r.prediction = check_cut_vertex_incident_removal(g, e, 0, opt);
        r.meg_before = meg_number(g, opt);
        r.meg_after = meg_number(delete_edge(g, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
        run.pin("cycle5-plus-pendant exact after", "cut-vertex-pendant-value", 3, *r.meg_after);
    }
    {  // two triangles sharing a vertex
        std::vector<EdgeId> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
        Graph g(5, edges);
        EdgeId e(0, 1);
        DeletionReport r;
        r.graph_id = "two-triangles-shared-vertex";
        r.deleted = {e};
        r.prediction = check_cut_vertex_incident_removal(g, e, 0, opt);
        r.meg_before = meg_number(g, opt);
        r.meg_after = meg_number(delete_edge(g, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }

    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int shared = 0;
        Graph g = build_shared_vertex_graph(rng, shared);
        const auto& nbrs = g.neighbors(shared);
        EdgeId e(shared, nbrs[rng.below(nbrs.size())]);
        DeletionReport r;
        r.graph_id = "cut-vertex-trial(" + std::to_string(i) + ")";
        r.deleted = {e};
        r.prediction = check_cut_vertex_incident_removal(g, e, shared, opt);
        r.meg_before = meg_number(g, opt);
        r.meg_after = meg_number(delete_edge(g, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

inline void run_simplicial_bounds(SuiteRun& run) {
    auto opt = run.solver();

    {  // complete graph on four vertices minus one edge
        Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        EdgeId e(0, 1);
        DeletionReport r;
        r.graph_id = "complete(4)";
        r.deleted = {e};
        r.prediction = check_simplicial_incident_removal(k4, e, 0, opt);
        r.meg_before = meg_number(k4, opt);
        r.meg_after = meg_number(delete_edge(k4, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
        run.pin("complete(4) minus edge exact", "simplicial-k4-value", 4, *r.meg_after);
    }
    {  // triangle: any edge removal lands at 2
        Graph c3 = gen_cycle(3).graph;
        EdgeId e(0, 1);
        DeletionReport r;
        r.graph_id = "cycle(3)";
        r.deleted = {e};
        r.prediction = check_simplicial_incident_removal(c3, e, 0, opt);
        r.meg_before = meg_number(c3, opt);
        r.meg_after = meg_number(delete_edge(c3, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
        run.pin("cycle(3) minus edge exact", "simplicial-c3-value", 2, *r.meg_after);
    }
    {  // triangle with a path tail, removing a triangle edge at a simplicial vertex
        std::vector<EdgeId> edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}};
        Graph g(5, edges);
        EdgeId e(0, 1);
        DeletionReport r;
        r.graph_id = "triangle-with-tail";
        r.deleted = {e};
        r.prediction = check_simplicial_incident_removal(g, e, 0, opt);
        r.meg_before = meg_number(g, opt);
        r.meg_after = meg_number(delete_edge(g, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }

    Rng master(run.spec().seed);
    int trials = run.trials(100);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int base_n = rng.range(4, 12);
        Graph base = gen_random_connected(
            base_n, rng.range(base_n - 1, std::min(base_n * (base_n - 1) / 2, base_n + 4)),
            rng.raw()).graph;
        // New vertex adjacent to both endpoints of an existing edge: a
        // degree-2 simplicial vertex by construction.
        EdgeId anchor = base.edges()[rng.below(base.edges().size())];
        std::vector<EdgeId> edges = base.edges();
        int v = base_n;
        edges.emplace_back(anchor.a, v);
        edges.emplace_back(anchor.b, v);
        Graph g(base_n + 1, edges);
        EdgeId e(v, rng.below(2) ? anchor.a : anchor.b);
        DeletionReport r;
        r.graph_id = "simplicial-trial(" + std::to_string(i) + ")";
        r.deleted = {e};
        r.prediction = check_simplicial_incident_removal(g, e, v, opt);
        r.meg_before = meg_number(g, opt);
        r.meg_after = meg_number(delete_edge(g, e), opt);
        r.verdict = judge(r.prediction, r.meg_after);
        run.tally(r);
    }
}

inline void run_forced_vertices(SuiteRun& run) {
    Rng master(run.spec().seed);
    int trials = run.trials(300);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int n = rng.range(2, 10);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        int m = rng.range(n - 1, static_cast<int>(max_m));
        Graph g = gen_random_connected(n, m, rng.raw()).graph;

        auto sets = enumerate_min_meg_sets(g);
        std::vector<int> forced = forced_vertices(g);
        StructureSummary s = structure(g);
        std::vector<int> must = forced;
        for (int v : s.simplicial_vertices) must.push_back(v);
        for (int v : s.pendant_vertices) must.push_back(v);
        std::sort(must.begin(), must.end());
        must.erase(std::unique(must.begin(), must.end()), must.end());
        std::vector<int> banned = s.cut_vertices;
        for (const EdgeId& e : s.cut_edges) {
            if (g.degree(e.a) >= 2) banned.push_back(e.a);
            if (g.degree(e.b) >= 2) banned.push_back(e.b);
        }
        std::sort(banned.begin(), banned.end());
        banned.erase(std::unique(banned.begin(), banned.end()), banned.end());

        bool ok = !sets.sets.empty();
        for (const auto& set : sets.sets) {
            for (int v : must)
                if (!std::binary_search(set.begin(), set.end(), v)) ok = false;
            for (int v : set)
                if (std::binary_search(banned.begin(), banned.end(), v)) ok = false;
        }
        DeletionReport r;
        r.graph_id = "forced-trial(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                     ",i=" + std::to_string(i) + ")";
        int meg = static_cast<int>(sets.sets.empty() ? 0 : sets.sets.front().size());
        r.meg_before = meg;
        r.meg_after = meg;
        r.prediction = Prediction::exact_value(meg, "structural-membership");
        r.verdict = ok ? Verdict::match : Verdict::violation;
        run.tally(r);
    }
}

inline void run_oracle_equivalence(SuiteRun& run) {
    Rng master(run.spec().seed);
    int trials = run.trials(200);
    for (int i = 0; i < trials && !run.out_of_time(); ++i) {
        Rng rng(master.raw());
        int n = rng.range(2, 12);
        Graph g;
        if (i % 4 == 3) {  // arbitrary density, possibly disconnected
            long long max_m = static_cast<long long>(n) * (n - 1) / 2;
            int m = static_cast<int>(rng.below(max_m + 1));
            std::vector<EdgeId> edges;
            std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
            while (static_cast<int>(edges.size()) < m) {
                int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
                if (a == b || present[a][b]) continue;
                present[a][b] = present[b][a] = true;
                edges.emplace_back(a, b);
            }
            g = Graph(n, edges);
        } else {
            long long max_m = static_cast<long long>(n) * (n - 1) / 2;
            g = gen_random_connected(n, rng.range(n - 1, static_cast<int>(max_m)), rng.raw()).graph;
        }
        DistanceTable dt = all_pairs(g, /*with_counts=*/true);
        bool agree = true;
        for (int u = 0; u < n && agree; ++u)
            for (int v = u + 1; v < n && agree; ++v) {
                if (!dt.connected(u, v)) continue;
                for (const EdgeId& e : g.edges())
                    if (monitors(g, dt, u, v, e) != monitors_by_counts(g, dt, u, v, e)) {
                        agree = false;
                        break;
                    }
            }
        DeletionReport r;
        r.graph_id = "oracle-trial(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")";
        r.prediction = Prediction::exact_value(1, "predicate-agreement");
        r.meg_before = 1;
        r.meg_after = agree ? 1 : 0;
        r.verdict = agree ? Verdict::match : Verdict::violation;
        run.tally(r);
    }
}

inline void run_split_extremal(SuiteRun& run) {
    auto opt = run.solver();
    for (int n : {6, 8, 10}) {
        if (run.out_of_time()) return;
        auto gen = gen_split_counterexample(n);
        run.pin(describe(gen.tag, 0) + " formula", "split-extremal-formula", n, meg_split(gen.graph));
        run.pin(describe(gen.tag, 0) + " solver", "split-extremal-solver", n,
                meg_number(gen.graph, opt));
        run.pin(describe(gen.tag, 0) + " extremal", "split-extremal-flag", 1,
                is_meg_extremal(gen.graph, opt) ? 1 : 0);
    }
    {
        auto gen = gen_split_counterexample(8);
        Graph after = delete_edge(gen.graph, gen.tag.designated.front());  // u1v1
        run.pin("split-counterexample(8) minus u1v1 formula", "split-after-formula", 7,
                meg_split(after));
        run.pin("split-counterexample(8) minus u1v1 solver", "split-after-solver", 7,
                meg_number(after, opt));
        run.pin("split-counterexample(8) minus u1v1 non-extremal", "split-after-flag", 0,
                is_meg_extremal(after, opt) ? 1 : 0);
    }
}

}  // namespace detail

inline TheoremReport run_suite(const TheoremSuiteSpec& spec) {
    if (spec.trials < 0) throw PreconditionError("run_suite: trials must be >= 1");
    detail::SuiteRun run(spec);
    if (spec.id == "class-formulas") detail::run_class_formulas(run);
    else if (spec.id == "unicyclic-formula") detail::run_unicyclic_formula(run);
    else if (spec.id == "tree-deletion") detail::run_tree_deletion(run);
    else if (spec.id == "tree-k-bounds") detail::run_tree_k_bounds(run);
    else if (spec.id == "extremal-construction") detail::run_extremal_construction(run);
    else if (spec.id == "grid-deletion") detail::run_grid_deletion(run);
    else if (spec.id == "pendant-bounds") detail::run_pendant_bounds(run);
    else if (spec.id == "cut-edge-bounds") detail::run_cut_edge_bounds(run);
    else if (spec.id == "cut-vertex-bounds") detail::run_cut_vertex_bounds(run);
    else if (spec.id == "simplicial-bounds") detail::run_simplicial_bounds(run);
    else if (spec.id == "forced-vertices") detail::run_forced_vertices(run);
    else if (spec.id == "oracle-equivalence") detail::run_oracle_equivalence(run);
    else if (spec.id == "split-extremal") detail::run_split_extremal(run);
    else throw PreconditionError("unknown suite '" + spec.id + "'");
    return run.finish();
}

}  // namespace meg
