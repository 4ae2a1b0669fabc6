#pragma once

// Test-only oracles, deliberately independent of the library's fast
// paths: shortest paths are enumerated explicitly, monitoring is "the
// edge appears on every enumerated path", and minimum sets come from a
// plain subset scan. Only usable at small n.

#include <algorithm>
#include <vector>

#include "meg/graph.hpp"

namespace oracle {

inline std::vector<int> bfs_dist(const meg::Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

/// Every shortest u-v path, as vertex sequences.
inline std::vector<std::vector<int>> all_shortest_paths(const meg::Graph& g, int u, int v) {
    std::vector<std::vector<int>> paths;
    std::vector<int> du = bfs_dist(g, u);
    if (du[v] < 0) return paths;
    std::vector<int> cur{v};
    // walk backwards from v along strictly descending distance
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == u) {
            paths.emplace_back(cur.rbegin(), cur.rend());
            return;
        }
        for (int w : g.neighbors(at))
            if (du[w] == du[at] - 1) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
    };
    dfs(dfs, v);
    return paths;
}

inline long long count_shortest_paths(const meg::Graph& g, int u, int v) {
    return static_cast<long long>(all_shortest_paths(g, u, v).size());
}

/// e lies on all shortest u-v paths, by explicit enumeration.
inline bool monitors_by_enumeration(const meg::Graph& g, int u, int v, const meg::EdgeId& e) {
    auto paths = all_shortest_paths(g, u, v);
    if (paths.empty()) return false;
    for (const auto& path : paths) {
        bool has = false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (meg::EdgeId(path[i], path[i + 1]) == e) {
                has = true;
                break;
            }
        if (!has) return false;
    }
    return true;
}

/// Per-pair covered edge sets (indices into g.edges()).
inline std::vector<std::vector<std::vector<bool>>> pair_coverage(const meg::Graph& g) {
    int n = g.vertex_count();
    std::vector cover(n, std::vector(n, std::vector<bool>(g.edges().size(), false)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (std::size_t i = 0; i < g.edges().size(); ++i)
                if (monitors_by_enumeration(g, u, v, g.edges()[i]))
                    cover[u][v][i] = true;
    return cover;
}

inline bool subset_covers(const meg::Graph& g,
                          const std::vector<std::vector<std::vector<bool>>>& cover,
                          const std::vector<int>& s) {
    std::vector<bool> covered(g.edges().size(), false);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = 0; k < covered.size(); ++k)
                if (cover[s[i]][s[j]][k]) covered[k] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// All minimum MEG-sets by subset scan; the first entry's size is meg.
inline std::vector<std::vector<int>> brute_min_sets(const meg::Graph& g) {
    if (g.edge_count() == 0) return {{}};
    auto cover = pair_coverage(g);
    int n = g.vertex_count();
    for (int size = 2; size <= n; ++size) {
        std::vector<std::vector<int>> found;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (subset_covers(g, cover, idx)) found.push_back(idx);
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found.empty()) return found;
    }
    return {};
}

inline int brute_meg(const meg::Graph& g) {
    auto sets = brute_min_sets(g);
    return sets.empty() ? -1 : static_cast<int>(sets.front().size());
}

}  // namespace oracle
