#pragma once

// Closed-form meg values for the graph classes that admit them, plus
// the classifiers needed to pick the right formula.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "meg/graph.hpp"
#include "meg/structure.hpp"

namespace meg {

inline int meg_path(int n) {
    if (n < 2) throw PreconditionError("meg_path: need n >= 2");
    return 2;
}

inline int meg_cycle(int n) {
    if (n < 3) throw PreconditionError("meg_cycle: need n >= 3");
    return n == 4 ? 4 : 3;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

inline int leaf_count(const Graph& g) {
    int leaves = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ++leaves;
    return leaves;
}

/// meg of a tree = its number of leaves.
inline int meg_tree(const Graph& t) {
    if (!is_tree(t) || t.edge_count() == 0)
        throw PreconditionError("meg_tree: input is not a tree with at least one edge");
    return leaf_count(t);
}

inline int meg_grid(int m, int n) {
    if (m < 2 || n < 2) throw PreconditionError("meg_grid: need m,n >= 2");
    return 2 * (m + n - 2);
}

struct UnicyclicProfile {
    std::vector<int> cycle_vertices;  // in cyclic order around the unique cycle
    int k = 0;                        // cycle length
    int l = 0;                        // pendant vertices in the whole graph
    std::vector<int> v_plus;          // cycle vertices of degree >= 3, sorted
    // 1 iff some arc between consecutive branch vertices spans at least
    // half the cycle (such an arc's edges cannot lie on all shortest
    // paths of any probe pair, so one extra probe is needed).
    int p = 0;
};

inline bool is_unicyclic(const Graph& g) {
    return g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() && is_connected(g);
}

inline UnicyclicProfile unicyclic_profile(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionError("unicyclic_profile: graph is not unicyclic");

    // Strip degree-1 vertices until only the cycle remains.
    std::vector<int> deg(g.vertex_count());
    std::vector<bool> removed(g.vertex_count(), false);
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed[v] = true;
        for (int w : g.neighbors(v))
            if (!removed[w] && --deg[w] == 1) queue.push_back(w);
    }

    UnicyclicProfile prof;
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) {
            start = v;
            break;
        }
    int prev = -1, cur = start;
    do {
        prof.cycle_vertices.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (!removed[w] && w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);

    prof.k = static_cast<int>(prof.cycle_vertices.size());
    prof.l = leaf_count(g);
    for (int v : prof.cycle_vertices)
        if (g.degree(v) >= 3) prof.v_plus.push_back(v);
    std::sort(prof.v_plus.begin(), prof.v_plus.end());

    // Longest arc (in cycle edges) between consecutive branch vertices.
    int max_arc = prof.k;  // no branch vertex: the whole cycle is one arc
    if (!prof.v_plus.empty()) {
        std::vector<int> plus_pos;
        for (int i = 0; i < prof.k; ++i)
            if (g.degree(prof.cycle_vertices[i]) >= 3) plus_pos.push_back(i);
        max_arc = 0;
        for (std::size_t i = 0; i < plus_pos.size(); ++i) {
            int gap = plus_pos[(i + 1) % plus_pos.size()] - plus_pos[i];
            if (gap <= 0) gap += prof.k;
            max_arc = std::max(max_arc, gap);
        }
    }
    prof.p = 2 * max_arc >= prof.k ? 1 : 0;
    return prof;
}

namespace detail {

inline int cycle_distance(const UnicyclicProfile& prof, int u, int v) {
    int pu = -1, pv = -1;
    for (int i = 0; i < prof.k; ++i) {
        if (prof.cycle_vertices[i] == u) pu = i;
        if (prof.cycle_vertices[i] == v) pv = i;
    }
    int d = std::abs(pu - pv);
    return std::min(d, prof.k - d);
}

}  // namespace detail

/// Which branch of the unicyclic formula applies; exposed so suites can
/// assert that their instance mix reaches every branch.
inline std::string unicyclic_case(const UnicyclicProfile& prof) {
    int vp = static_cast<int>(prof.v_plus.size());
    if (prof.k <= 4) return "short-cycle";
    if (vp == 0) return "bare-cycle";
    if (vp == 1) return "single-branch";
    if (vp == 2 && prof.k % 2 == 0) {
        int d = detail::cycle_distance(prof, prof.v_plus[0], prof.v_plus[1]);
        if (d == 1 || d == prof.k / 2) return "two-branch-special";
    }
    return "general";
}

inline int meg_unicyclic(const UnicyclicProfile& prof) {
    std::string c = unicyclic_case(prof);
    if (c == "short-cycle") return prof.l + prof.k - static_cast<int>(prof.v_plus.size());
    if (c == "bare-cycle") return 3;
    if (c == "single-branch") return prof.l + 2;
    if (c == "two-branch-special") return prof.l + prof.p + 1;
    return prof.l + prof.p;
}

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

/// Degree-sequence split test; the found partition is verified before
/// being returned.
inline std::optional<SplitPartition> is_split_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    long long prefix = 0;
    int m_star = 0;
    std::vector<long long> suffix_deg(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix_deg[i] = suffix_deg[i + 1] + g.degree(order[i]);
    for (int i = 0; i < n; ++i) {
        if (g.degree(order[i]) < i) break;
        m_star = i + 1;
    }
    for (int i = 0; i < m_star; ++i) prefix += g.degree(order[i]);
    if (prefix != static_cast<long long>(m_star) * (m_star - 1) + suffix_deg[m_star])
        return std::nullopt;

    SplitPartition part;
    part.clique.assign(order.begin(), order.begin() + m_star);
    part.independent.assign(order.begin() + m_star, order.end());
    auto valid = [&](const SplitPartition& cand) {
        for (std::size_t i = 0; i < cand.clique.size(); ++i)
            for (std::size_t j = i + 1; j < cand.clique.size(); ++j)
                if (!g.has_edge(cand.clique[i], cand.clique[j])) return false;
        for (std::size_t i = 0; i < cand.independent.size(); ++i)
            for (std::size_t j = i + 1; j < cand.independent.size(); ++j)
                if (g.has_edge(cand.independent[i], cand.independent[j])) return false;
        return true;
    };
    if (!valid(part)) {
        // Ties at the threshold can need one boundary swap.
        bool fixed = false;
        for (std::size_t i = 0; i < part.clique.size() && !fixed; ++i)
            for (std::size_t j = 0; j < part.independent.size() && !fixed; ++j) {
                if (g.degree(part.clique[i]) != g.degree(part.independent[j])) continue;
                SplitPartition swapped = part;
                std::swap(swapped.clique[i], swapped.independent[j]);
                if (valid(swapped)) {
                    part = swapped;
                    fixed = true;
                }
            }
        if (!fixed) return std::nullopt;
    }
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    return part;
}

/// meg of a split graph: n minus the number of vertices with a pendant
/// neighbor.
inline int meg_split(const Graph& g) {
    if (!is_split_graph(g)) throw PreconditionError("meg_split: graph is not split");
    int with_pendant_neighbor = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool has = false;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 1) {
                has = true;
                break;
            }
        if (has) ++with_pendant_neighbor;
    }
    return g.vertex_count() - with_pendant_neighbor;
}

enum class GraphClass { path, cycle, tree, unicyclic, split, unknown };

inline std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::path: return "path";
        case GraphClass::cycle: return "cycle";
        case GraphClass::tree: return "tree";
        case GraphClass::unicyclic: return "unicyclic";
        case GraphClass::split: return "split";
        default: return "unknown";
    }
}

/// Most specific applicable tag, probing path before tree and cycle
/// before unicyclic. Grids are not recognized here; they are tagged by
/// the generator that laid them out.
inline GraphClass classify(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n == 0 || !is_connected(g)) return GraphClass::unknown;
    if (n == 1) return GraphClass::path;
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (m == n - 1) return max_deg <= 2 ? GraphClass::path : GraphClass::tree;
    if (m == n) {
        bool all_two = true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 2) all_two = false;
        return all_two ? GraphClass::cycle : GraphClass::unicyclic;
    }
    if (is_split_graph(g)) return GraphClass::split;
    return GraphClass::unknown;
}

}  // namespace meg
