#pragma once

// Exact minimum MEG-set search with certificates.
//
// Per component: iterative deepening on set size, seeded with the
// forced vertices and drawing candidates from the non-excluded ones.
// Within a size level, candidate sets are enumerated in lexicographic
// order and the first cover wins, so certificates are reproducible.
// A fallback re-runs without the structural restrictions if the
// restricted search comes up empty; for well-behaved inputs it never
// fires, but it keeps the solver honest if a structural rule is ever
// violated by an input outside the rules' hypotheses.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meg/monitor.hpp"

namespace meg {

struct SolverOptions {
    int vertex_budget = 24;  // per-component exact-search cap
    bool structural_pruning = true;
};

struct Witness {
    EdgeId edge;
    int u = 0;
    int v = 0;
};

struct MegCertificate {
    std::vector<int> vertex_set;  // sorted; lexicographic minimum among optima
    int size = 0;
    std::vector<int> forced;
    std::vector<Witness> witnesses;  // one monitoring pair per edge, edge lex order
    bool optimal = false;
    bool used_fallback = false;
};

namespace detail {

inline boost::dynamic_bitset<> pair_union(const MonitorTable& table, int w,
                                          const std::vector<int>& others) {
    boost::dynamic_bitset<> acc(table.edges().size());
    for (int x : others)
        if (x != w) acc |= table.monitored(std::min(w, x), std::max(w, x));
    return acc;
}

/// Lexicographically first covering set of exactly `target` vertices of
/// the form forced ∪ A with A ⊆ allowed. `forced` and `allowed` are
/// sorted and disjoint.
inline std::optional<std::vector<int>> lex_cover_search(const MonitorTable& table,
                                                        const std::vector<int>& forced,
                                                        const std::vector<int>& allowed,
                                                        int target) {
    const std::size_t m = table.edges().size();
    int extra = target - static_cast<int>(forced.size());
    if (extra < 0 || extra > static_cast<int>(allowed.size())) return std::nullopt;

    boost::dynamic_bitset<> full(m);
    full.set();
    boost::dynamic_bitset<> base(m);
    for (std::size_t i = 0; i < forced.size(); ++i)
        for (std::size_t j = i + 1; j < forced.size(); ++j)
            base |= table.monitored(forced[i], forced[j]);

    // Everything a suffix of candidates could still cover, pairing each
    // candidate with any vertex in play. A superset of the reachable
    // coverage, so pruning on it is sound.
    std::vector<int> in_play = forced;
    in_play.insert(in_play.end(), allowed.begin(), allowed.end());
    std::vector<boost::dynamic_bitset<>> suffix(allowed.size() + 1, boost::dynamic_bitset<>(m));
    for (int i = static_cast<int>(allowed.size()) - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] | pair_union(table, allowed[i], in_play);

    std::vector<int> chosen = forced;
    std::function<bool(std::size_t, int, const boost::dynamic_bitset<>&)> dfs =
        [&](std::size_t start, int remaining, const boost::dynamic_bitset<>& covered) -> bool {
        if (remaining == 0) return covered == full;
        for (std::size_t i = start; i + remaining <= allowed.size(); ++i) {
            if ((covered | suffix[i]) != full) break;  // suffixes only shrink
            int w = allowed[i];
            boost::dynamic_bitset<> next = covered;
            for (int x : chosen) next |= table.monitored(std::min(w, x), std::max(w, x));
            chosen.push_back(w);
            if (dfs(i + 1, remaining - 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (!dfs(0, extra, base)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

/// Minimum MEG-set of a connected component (local vertex ids).
inline std::vector<int> solve_component(const Graph& comp, const SolverOptions& opt,
                                        bool& used_fallback) {
    if (comp.edge_count() == 0) return {};
    MonitorTable table(comp);

    std::vector<int> forced, excluded;
    if (opt.structural_pruning) {
        forced = forced_vertices(comp);
        excluded = excluded_vertices(comp);
    }
    std::vector<int> allowed;
    for (int v = 0; v < comp.vertex_count(); ++v)
        if (!std::binary_search(forced.begin(), forced.end(), v) &&
            !std::binary_search(excluded.begin(), excluded.end(), v))
            allowed.push_back(v);

    int start = std::max<int>(static_cast<int>(forced.size()), 2);
    int limit = static_cast<int>(forced.size() + allowed.size());
    for (int target = start; target <= limit; ++target)
        if (auto s = lex_cover_search(table, forced, allowed, target)) return *s;

    // The restricted pool cannot cover; rerun over all vertices.
    used_fallback = true;
    std::vector<int> everything(comp.vertex_count());
    for (int v = 0; v < comp.vertex_count(); ++v) everything[v] = v;
    for (int target = 2; target <= comp.vertex_count(); ++target)
        if (auto s = lex_cover_search(table, {}, everything, target)) return *s;
    throw std::logic_error("solve_component: full vertex set failed to cover its own edges");
}

}  // namespace detail

/// Exact minimum MEG-set with certificate; per-component search joined
/// by disjoint union. Components above the vertex budget raise
/// BudgetError rather than approximating.
inline MegCertificate min_meg(const Graph& g, const SolverOptions& opt = {}) {
    auto comps = connected_components(g);
    for (const auto& comp : comps)
        if (static_cast<int>(comp.size()) > opt.vertex_budget)
            throw BudgetError("component with " + std::to_string(comp.size()) +
                              " vertices exceeds solver budget of " +
                              std::to_string(opt.vertex_budget));

    MegCertificate cert;
    cert.optimal = true;
    for (const auto& comp : comps) {
        Subgraph sub = induced_subgraph(g, comp);
        std::vector<int> local = detail::solve_component(sub.graph, opt, cert.used_fallback);
        for (int v : local) cert.vertex_set.push_back(sub.to_global[v]);
    }
    std::sort(cert.vertex_set.begin(), cert.vertex_set.end());
    cert.size = static_cast<int>(cert.vertex_set.size());
    cert.forced = forced_vertices(g);

    if (g.edge_count() > 0) {
        DistanceTable dt = all_pairs(g, /*with_counts=*/true);
        for (const EdgeId& e : g.edges()) {
            bool found = false;
            for (std::size_t i = 0; i < cert.vertex_set.size() && !found; ++i)
                for (std::size_t j = i + 1; j < cert.vertex_set.size() && !found; ++j) {
                    int u = cert.vertex_set[i], v = cert.vertex_set[j];
                    if (!dt.connected(u, v)) continue;
                    if (monitors_by_counts(g, dt, u, v, e)) {
                        cert.witnesses.push_back({e, u, v});
                        found = true;
                    }
                }
            if (!found)
                throw std::logic_error("min_meg: certificate does not cover edge (" +
                                       std::to_string(e.a) + "," + std::to_string(e.b) + ")");
        }
    }
    return cert;
}

inline int meg_number(const Graph& g, const SolverOptions& opt = {}) {
    return min_meg(g, opt).size;
}

struct MegSetEnumeration {
    std::vector<std::vector<int>> sets;  // lexicographic order
    bool truncated = false;
};

/// All minimum MEG-sets, by unrestricted exhaustive search (the
/// structural rules are the thing this enumeration is used to test).
/// limit = 0 means unlimited.
inline MegSetEnumeration enumerate_min_meg_sets(const Graph& g, std::size_t limit = 0,
                                                const SolverOptions& opt = {}) {
    if (g.vertex_count() > opt.vertex_budget)
        throw BudgetError("graph with " + std::to_string(g.vertex_count()) +
                          " vertices exceeds enumeration budget of " +
                          std::to_string(opt.vertex_budget));
    MegSetEnumeration result;
    if (g.edge_count() == 0) {
        result.sets.push_back({});
        return result;
    }

    MonitorTable table(g);
    const std::size_t m = table.edges().size();
    boost::dynamic_bitset<> full(m);
    full.set();
    std::vector<int> everything(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) everything[v] = v;
    std::vector<boost::dynamic_bitset<>> suffix(everything.size() + 1,
                                                boost::dynamic_bitset<>(m));
    for (int i = static_cast<int>(everything.size()) - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] | detail::pair_union(table, everything[i], everything);

    std::vector<int> chosen;
    // Returns false once the limit cuts the enumeration short.
    std::function<bool(std::size_t, int, const boost::dynamic_bitset<>&)> dfs =
        [&](std::size_t start, int remaining, const boost::dynamic_bitset<>& covered) -> bool {
        if (remaining == 0) {
            if (covered != full) return true;
            if (limit != 0 && result.sets.size() == limit) {
                result.truncated = true;
                return false;
            }
            result.sets.push_back(chosen);
            return true;
        }
        for (std::size_t i = start; i + remaining <= everything.size(); ++i) {
            if ((covered | suffix[i]) != full) break;
            int w = everything[i];
            boost::dynamic_bitset<> next = covered;
            for (int x : chosen) next |= table.monitored(std::min(w, x), std::max(w, x));
            chosen.push_back(w);
            bool keep = dfs(i + 1, remaining - 1, next);
            chosen.pop_back();
            if (!keep) return false;
        }
        return true;
    };

    boost::dynamic_bitset<> none(m);
    for (int s = 2; s <= g.vertex_count(); ++s) {
        dfs(0, s, none);
        if (!result.sets.empty() || result.truncated) break;
    }
    return result;
}

}  // namespace meg
