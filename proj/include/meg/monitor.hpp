#pragma once

// The edge-monitoring predicate and the structures built from it.
//
// A pair (u,v) monitors edge e when e lies on every shortest u-v path,
// or equivalently when removing e strictly increases d(u,v). The
// removal form is the reference implementation; the path-count form is
// the fast path and must agree with it on every input (tested).

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "meg/distance.hpp"
#include "meg/graph.hpp"
#include "meg/structure.hpp"

namespace meg {

/// Reference predicate: d(u,v) in g minus e strictly exceeds d(u,v) in g
/// (becoming unreachable counts as an increase).
inline bool monitors(const Graph& g, const DistanceTable& dt, int u, int v, const EdgeId& e) {
    if (u == v) throw PreconditionError("monitors: u == v");
    if (!g.has_edge(e)) throw PreconditionError("monitors: edge not in graph");
    if (!dt.connected(u, v)) throw PreconditionError("monitors: pair is disconnected");
    int after = detail::bfs_dist_skipping(g, u, v, e);
    return after == DistanceTable::kUnreachable || after > dt.dist(u, v);
}

/// Count form: orient e = (x,y) so that d(u,x)+1+d(y,v) = d(u,v); then e
/// is on every shortest u-v path iff sigma(u,x)*sigma(y,v) = sigma(u,v).
/// At most one orientation can satisfy the distance equation.
inline bool monitors_by_counts(const Graph& g, const DistanceTable& dt, int u, int v,
                               const EdgeId& e) {
    if (u == v) throw PreconditionError("monitors_by_counts: u == v");
    if (!g.has_edge(e)) throw PreconditionError("monitors_by_counts: edge not in graph");
    if (!dt.connected(u, v)) throw PreconditionError("monitors_by_counts: pair is disconnected");
    if (!dt.has_counts()) throw PreconditionError("monitors_by_counts: sigma missing");

    int duv = dt.dist(u, v);
    for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        if (!dt.connected(u, x) || !dt.connected(y, v)) continue;
        if (dt.dist(u, x) + 1 + dt.dist(y, v) != duv) continue;
        return dt.count(u, x) * dt.count(y, v) == dt.count(u, v);
    }
    return false;
}

/// For every canonical pair {u,v}, the set of edges it monitors, as a
/// bitset over the graph's lexicographic edge order.
class MonitorTable {
public:
    MonitorTable() = default;

    explicit MonitorTable(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {
        DistanceTable dt = all_pairs(g, /*with_counts=*/true);
        rows_.assign(static_cast<std::size_t>(n_) * n_, boost::dynamic_bitset<>(edges_.size()));
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (!dt.connected(u, v)) continue;  // disconnected pairs monitor nothing
                auto& row = rows_[static_cast<std::size_t>(u) * n_ + v];
                for (std::size_t i = 0; i < edges_.size(); ++i)
                    if (monitors_by_counts(g, dt, u, v, edges_[i])) row.set(i);
            }
    }

    int vertex_count() const { return n_; }
    const std::vector<EdgeId>& edges() const { return edges_; }

    const boost::dynamic_bitset<>& monitored(int u, int v) const {
        if (u > v) std::swap(u, v);
        return rows_[static_cast<std::size_t>(u) * n_ + v];
    }

    std::vector<EdgeId> monitored_edges(int u, int v) const {
        std::vector<EdgeId> out;
        const auto& row = monitored(u, v);
        for (std::size_t i = row.find_first(); i != boost::dynamic_bitset<>::npos;
             i = row.find_next(i))
            out.push_back(edges_[i]);
        return out;
    }

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<boost::dynamic_bitset<>> rows_;
};

inline MonitorTable monitor_table(const Graph& g) { return MonitorTable(g); }

struct MegCheck {
    bool is_meg = false;
    std::vector<EdgeId> uncovered;
};

/// Does the pair set s monitor every edge of g?
inline MegCheck is_meg_set(const Graph& g, std::span<const int> s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw PreconditionError("is_meg_set: vertex out of range");
    DistanceTable dt = all_pairs(g, /*with_counts=*/true);
    boost::dynamic_bitset<> covered(g.edges().size());
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            int u = sorted[i], v = sorted[j];
            if (!dt.connected(u, v)) continue;
            for (std::size_t k = 0; k < g.edges().size(); ++k)
                if (!covered.test(k) && monitors_by_counts(g, dt, u, v, g.edges()[k]))
                    covered.set(k);
        }
    MegCheck result;
    result.is_meg = covered.count() == g.edges().size();
    for (std::size_t k = 0; k < g.edges().size(); ++k)
        if (!covered.test(k)) result.uncovered.push_back(g.edges()[k]);
    return result;
}

/// Vertices that belong to every MEG-set: v qualifies iff some neighbor
/// u exists such that every induced 2-path u-v-x closes into a 4-cycle
/// (a pendant vertex qualifies vacuously). Local rule, so it applies
/// unchanged to disconnected graphs.
inline std::vector<int> forced_vertices(const Graph& g) {
    auto mask = detail::adjacency_masks(g);
    std::vector<int> forced;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        bool ok_for_some_u = false;
        for (int u : g.neighbors(v)) {
            bool all_cycles = true;
            for (int x : g.neighbors(v)) {
                if (x == u || mask[u].test(x)) continue;  // not an induced 2-path
                auto common = mask[u] & mask[x];
                common.reset(v);
                if (!common.any()) {
                    all_cycles = false;
                    break;
                }
            }
            if (all_cycles) {
                ok_for_some_u = true;
                break;
            }
        }
        if (ok_for_some_u) forced.push_back(v);
    }
    return forced;
}

/// Vertices that no minimum MEG-set uses: cut vertices, plus cut-edge
/// endpoints of degree >= 2.
inline std::vector<int> excluded_vertices(const Graph& g) {
    StructureSummary s = structure(g);
    std::vector<bool> out(g.vertex_count(), false);
    for (int v : s.cut_vertices) out[v] = true;
    for (const EdgeId& e : s.cut_edges) {
        if (g.degree(e.a) >= 2) out[e.a] = true;
        if (g.degree(e.b) >= 2) out[e.b] = true;
    }
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (out[v]) result.push_back(v);

    std::vector<int> forced = forced_vertices(g);
    for (int v : result)
        if (std::binary_search(forced.begin(), forced.end(), v))
            throw std::logic_error("excluded vertex " + std::to_string(v) +
                                   " is also forced; structural rules are inconsistent");
    return result;
}

}  // namespace meg
