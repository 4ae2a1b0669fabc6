#pragma once

// All-pairs hop distances by BFS, with optional shortest-path counts.
// Counts are arbitrary precision: on grid-like graphs they grow as
// binomial coefficients and silent overflow would corrupt the
// monitoring predicate built on top of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

using BigCount = boost::multiprecision::cpp_int;

class DistanceTable {
public:
    /// Sentinel for disconnected pairs. Callers must branch on it
    /// explicitly; it never participates in arithmetic.
    static constexpr int kUnreachable = -1;

    DistanceTable() = default;
    DistanceTable(int n, bool with_counts)
        : n_(n), has_counts_(with_counts), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {
        if (with_counts) sigma_.resize(static_cast<std::size_t>(n) * n);
    }

    int size() const { return n_; }
    bool has_counts() const { return has_counts_; }

    int dist(int u, int v) const { return dist_[idx(u, v)]; }
    bool connected(int u, int v) const { return dist_[idx(u, v)] != kUnreachable; }

    const BigCount& count(int u, int v) const {
        if (!has_counts_) throw PreconditionError("distance table built without path counts");
        return sigma_[idx(u, v)];
    }

    int& dist_ref(int u, int v) { return dist_[idx(u, v)]; }
    BigCount& count_ref(int u, int v) { return sigma_[idx(u, v)]; }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    bool has_counts_ = false;
    std::vector<int> dist_;
    std::vector<BigCount> sigma_;
};

namespace detail {

// BFS from src filling one row; sigma follows the layered recurrence
// sigma[w] = sum of sigma[u] over predecessors u with d[u] + 1 = d[w].
inline void bfs_row(const Graph& g, int src, DistanceTable& table) {
    table.dist_ref(src, src) = 0;
    if (table.has_counts()) table.count_ref(src, src) = 1;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int du = table.dist(src, u);
        for (int w : g.neighbors(u)) {
            if (table.dist(src, w) == DistanceTable::kUnreachable) {
                table.dist_ref(src, w) = du + 1;
                queue.push_back(w);
            }
            if (table.has_counts() && table.dist(src, w) == du + 1)
                table.count_ref(src, w) += table.count(src, u);
        }
    }
}

/// Hop distance between u and v in g with edge `skip` removed, or
/// kUnreachable. Used as the reference monitoring semantics.
inline int bfs_dist_skipping(const Graph& g, int u, int v, const EdgeId& skip) {
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), DistanceTable::kUnreachable);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (EdgeId(x, y) == skip) continue;
            if (dist[y] != DistanceTable::kUnreachable) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push_back(y);
        }
    }
    return DistanceTable::kUnreachable;
}

}  // namespace detail

inline DistanceTable all_pairs(const Graph& g, bool with_counts = false) {
    DistanceTable table(g.vertex_count(), with_counts);
    for (int s = 0; s < g.vertex_count(); ++s) detail::bfs_row(g, s, table);
    return table;
}

}  // namespace meg
