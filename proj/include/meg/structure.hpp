#pragma once

// Structural classifiers: connected components, cut vertices and cut
// edges (one iterative lowpoint pass), pendant and simplicial vertices.

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

struct StructureSummary {
    std::vector<std::vector<int>> components;  // each sorted ascending
    std::vector<int> cut_vertices;             // sorted
    std::vector<EdgeId> cut_edges;             // sorted
    std::vector<int> pendant_vertices;         // degree exactly 1
    std::vector<int> simplicial_vertices;      // degree >= 1, neighborhood a clique
    std::vector<int> degrees;
};

namespace detail {

/// Per-vertex adjacency bitsets; handy for clique and common-neighbor tests.
inline std::vector<boost::dynamic_bitset<>> adjacency_masks(const Graph& g) {
    std::vector<boost::dynamic_bitset<>> mask(g.vertex_count(),
                                              boost::dynamic_bitset<>(g.vertex_count()));
    for (const EdgeId& e : g.edges()) {
        mask[e.a].set(e.b);
        mask[e.b].set(e.a);
    }
    return mask;
}

// Iterative lowpoint DFS; recursion would overflow on long paths fed
// through the CLI.
inline void cut_search(const Graph& g, std::vector<int>& cut_vertices,
                       std::vector<EdgeId>& cut_edges) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0), next_nbr(n, 0);
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            if (next_nbr[u] < g.degree(u)) {
                int w = g.neighbors(u)[next_nbr[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    ++child_count[u];
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > disc[p]) cut_edges.emplace_back(p, u);
                    if (p != root && low[u] >= disc[p]) is_cut[p] = true;
                }
            }
        }
        if (child_count[root] >= 2) is_cut[root] = true;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) cut_vertices.push_back(v);
    std::sort(cut_edges.begin(), cut_edges.end());
}

}  // namespace detail

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps[id].push_back(u);
            for (int w : g.neighbors(u))
                if (label[w] == -1) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

inline StructureSummary structure(const Graph& g) {
    StructureSummary s;
    s.components = connected_components(g);
    detail::cut_search(g, s.cut_vertices, s.cut_edges);
    s.degrees.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.degrees[v] = g.degree(v);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) s.pendant_vertices.push_back(v);

    auto mask = detail::adjacency_masks(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 1) continue;  // isolated vertices are not simplicial here
        bool clique = true;
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i + 1 < nbrs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!mask[nbrs[i]].test(nbrs[j])) {
                    clique = false;
                    break;
                }
        if (clique) s.simplicial_vertices.push_back(v);
    }
    return s;
}

}  // namespace meg
