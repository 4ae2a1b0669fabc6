#pragma once

// Deterministic, seeded construction of every graph family the test
// suites draw from. All randomness flows through Rng (a mt19937_64
// with modulo draws); given the same parameters and seed, regeneration
// is bit-identical. Distributions are reproducible, not uniform.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "meg/graph.hpp"

namespace meg {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish draw in [0, bound); modulo bias is accepted for
    /// reproducibility across standard libraries.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct GenTag {
    std::string family;
    std::vector<std::pair<std::string, long long>> params;  // insertion order preserved
    std::vector<EdgeId> designated;  // edges the family singles out (if any)

    long long param(const std::string& key) const {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        throw PreconditionError("tag has no parameter '" + key + "'");
    }
};

struct GeneratedGraph {
    Graph graph;
    GenTag tag;
    std::uint64_t seed = 0;
};

inline GeneratedGraph gen_path(int n) {
    if (n < 1) throw PreconditionError("gen_path: need n >= 1");
    std::vector<EdgeId> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return {Graph(n, edges), {"path", {{"n", n}}, {}}, 0};
}

inline GeneratedGraph gen_cycle(int n) {
    if (n < 3) throw PreconditionError("gen_cycle: need n >= 3");
    std::vector<EdgeId> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return {Graph(n, edges), {"cycle", {{"n", n}}, {}}, 0};
}

/// Star K_{1,n-1} with center 0.
inline GeneratedGraph gen_star(int n) {
    if (n < 2) throw PreconditionError("gen_star: need n >= 2");
    std::vector<EdgeId> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return {Graph(n, edges), {"star", {{"n", n}}, {}}, 0};
}

/// Row-major m x n grid: vertex (r,c), 1-indexed, maps to (r-1)*n+(c-1).
inline int grid_index(int m, int n, int r, int c) {
    if (r < 1 || r > m || c < 1 || c > n)
        throw PreconditionError("grid_index: coordinates outside grid");
    return (r - 1) * n + (c - 1);
}

inline std::pair<int, int> grid_coord(int /*m*/, int n, int index) {
    return {index / n + 1, index % n + 1};
}

inline GeneratedGraph gen_grid(int m, int n) {
    if (m < 2 || n < 2) throw PreconditionError("gen_grid: need m,n >= 2");
    std::vector<EdgeId> edges;
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c) {
            if (c < n) edges.emplace_back(grid_index(m, n, r, c), grid_index(m, n, r, c + 1));
            if (r < m) edges.emplace_back(grid_index(m, n, r, c), grid_index(m, n, r + 1, c));
        }
    return {Graph(m * n, edges), {"grid", {{"m", m}, {"n", n}}, {}}, 0};
}

/// Heap layout: root 0, children of i at 2i+1 and 2i+2; height h gives
/// 2^(h+1)-1 vertices and 2^h leaves.
inline GeneratedGraph gen_perfect_binary_tree(int h) {
    if (h < 0) throw PreconditionError("gen_perfect_binary_tree: need h >= 0");
    int n = (1 << (h + 1)) - 1;
    std::vector<EdgeId> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return {Graph(n, edges), {"perfect-binary-tree", {{"h", h}}, {}}, 0};
}

/// Random parent attachment: vertex v joins a uniform earlier vertex.
inline GeneratedGraph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("gen_random_tree: need n >= 1");
    Rng rng(seed);
    std::vector<EdgeId> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.range(0, v - 1), v);
    return {Graph(n, edges), {"random-tree", {{"n", n}}, {}}, seed};
}

/// Cycle of length k_cycle plus random tree attachments.
inline GeneratedGraph gen_random_unicyclic(int n, int k_cycle, std::uint64_t seed) {
    if (k_cycle < 3 || n < k_cycle)
        throw PreconditionError("gen_random_unicyclic: need n >= k_cycle >= 3");
    Rng rng(seed);
    std::vector<EdgeId> edges;
    for (int v = 0; v < k_cycle; ++v) edges.emplace_back(v, (v + 1) % k_cycle);
    for (int v = k_cycle; v < n; ++v) edges.emplace_back(rng.range(0, v - 1), v);
    return {Graph(n, edges), {"random-unicyclic", {{"n", n}, {"k", k_cycle}}, {}}, seed};
}

/// Random spanning tree plus random extra edges until m in total.
inline GeneratedGraph gen_random_connected(int n, int m, std::uint64_t seed) {
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (n < 1 || m < n - 1 || m > max_edges)
        throw PreconditionError("gen_random_connected: need n-1 <= m <= n(n-1)/2");
    Rng rng(seed);
    std::vector<EdgeId> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    auto add = [&](int a, int b) {
        edges.emplace_back(a, b);
        present[a][b] = present[b][a] = true;
    };
    for (int v = 1; v < n; ++v) add(rng.range(0, v - 1), v);
    while (static_cast<int>(edges.size()) < m) {
        int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
        if (a != b && !present[a][b]) add(a, b);
    }
    return {Graph(n, edges), {"random-connected", {{"n", n}, {"m", m}}, {}}, seed};
}

/// Chain of k four-vertex blocks joined through subtrees. The middle
/// edge of each block is designated; its endpoints keep degree exactly
/// 2 and distinct blocks never share a vertex, so deleting the whole
/// designated list raises meg by exactly 2k. pads gives the k+1 subtree
/// sizes (default: all single vertices, which makes the graph a path).
inline GeneratedGraph gen_extremal_tree(int k, std::vector<int> pads = {}) {
    if (k < 1) throw PreconditionError("gen_extremal_tree: need k >= 1");
    if (pads.empty()) pads.assign(k + 1, 1);
    if (static_cast<int>(pads.size()) != k + 1)
        throw PreconditionError("gen_extremal_tree: need exactly k+1 pad sizes");
    for (int s : pads)
        if (s < 1) throw PreconditionError("gen_extremal_tree: pad sizes must be >= 1");

    std::vector<EdgeId> edges, designated;
    int next = 0;
    auto fresh = [&]() { return next++; };

    // Junction subtree: a hub vertex plus (size-1) pendant leaves.
    auto make_hub = [&](int size) {
        int hub = fresh();
        for (int i = 1; i < size; ++i) edges.emplace_back(hub, fresh());
        return hub;
    };

    int attach = make_hub(pads[0]);  // holds the first block's outer vertex
    for (int i = 0; i < k; ++i) {
        int u = fresh(), v = fresh();
        edges.emplace_back(attach, u);
        edges.emplace_back(u, v);
        designated.emplace_back(u, v);
        attach = make_hub(pads[i + 1]);
        edges.emplace_back(v, attach);
    }

    GenTag tag{"extremal-tree", {{"k", k}}, designated};
    for (std::size_t i = 0; i < pads.size(); ++i)
        tag.params.emplace_back("pad" + std::to_string(i), pads[i]);
    return {Graph(next, edges), tag, 0};
}

/// Clique K_{n-2} with two outside vertices v1, v2, each adjacent to the
/// same two clique vertices u1, u2. A split graph with meg = n whose
/// four designated edges each drop meg below n when removed.
inline GeneratedGraph gen_split_counterexample(int n) {
    if (n < 6) throw PreconditionError("gen_split_counterexample: need n >= 6");
    std::vector<EdgeId> edges;
    int u1 = 0, u2 = 1, v1 = n - 2, v2 = n - 1;
    for (int a = 0; a < n - 2; ++a)
        for (int b = a + 1; b < n - 2; ++b) edges.emplace_back(a, b);
    edges.emplace_back(u1, v1);
    edges.emplace_back(u1, v2);
    edges.emplace_back(u2, v1);
    edges.emplace_back(u2, v2);
    GenTag tag{"split-counterexample",
               {{"n", n}, {"u1", u1}, {"u2", u2}, {"v1", v1}, {"v2", v2}},
               {EdgeId(u1, v1), EdgeId(u1, v2), EdgeId(u2, v1), EdgeId(u2, v2)}};
    return {Graph(n, edges), tag, 0};
}

}  // namespace meg
