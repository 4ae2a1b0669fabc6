#pragma once

// Undirected simple graphs with normalized edge identities, plus the
// edge-list text format used by every tool in this project.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace meg {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair stored with a < b.
struct EdgeId {
    int a = 0;
    int b = 0;

    EdgeId() = default;
    EdgeId(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {}

    auto operator<=>(const EdgeId&) const = default;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        adj_.resize(n);
    }

    Graph(int n, std::span<const EdgeId> edges) : Graph(n) {
        std::vector<EdgeId> sorted(edges.begin(), edges.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const EdgeId& e = sorted[i];
            if (e.a == e.b) throw std::invalid_argument("self-loop");
            if (e.a < 0 || e.b >= n_) throw std::invalid_argument("edge endpoint out of range");
            if (i > 0 && sorted[i - 1] == e) throw std::invalid_argument("duplicate edge");
        }
        edges_ = std::move(sorted);
        for (const EdgeId& e : edges_) {
            adj_[e.a].push_back(e.b);
            adj_[e.b].push_back(e.a);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<EdgeId>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& small = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(small.begin(), small.end(), other);
    }

    bool has_edge(const EdgeId& e) const { return has_edge(e.a, e.b); }

    /// Position of e in the lexicographically sorted edge list.
    std::optional<int> edge_index(const EdgeId& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;          // sorted, normalized
    std::vector<std::vector<int>> adj_;  // derived, sorted neighbor lists
};

/// Copy of g without edge e; the input graph is untouched.
inline Graph delete_edge(const Graph& g, const EdgeId& e) {
    if (!g.has_edge(e))
        throw PreconditionError("missing edge (" + std::to_string(e.a) + "," +
                                std::to_string(e.b) + ")");
    std::vector<EdgeId> kept;
    kept.reserve(g.edges().size() - 1);
    for (const EdgeId& f : g.edges())
        if (f != e) kept.push_back(f);
    return Graph(g.vertex_count(), kept);
}

inline Graph delete_edges(const Graph& g, std::span<const EdgeId> es) {
    std::vector<EdgeId> drop(es.begin(), es.end());
    std::sort(drop.begin(), drop.end());
    for (const EdgeId& e : drop)
        if (!g.has_edge(e))
            throw PreconditionError("missing edge (" + std::to_string(e.a) + "," +
                                    std::to_string(e.b) + ")");
    std::vector<EdgeId> kept;
    for (const EdgeId& f : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), f)) kept.push_back(f);
    return Graph(g.vertex_count(), kept);
}

namespace detail {

// Strict integer-token line: exactly `count` base-10 integers, nothing else.
inline std::optional<std::vector<long long>> parse_int_line(const std::string& line, int count) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) return std::nullopt;  // non-numeric token
    if (static_cast<int>(out.size()) != count) return std::nullopt;
    return out;
}

}  // namespace detail

/// Edge-list document: header "n m", then m lines "a b". Lines starting
/// with '#' and blank lines are ignored on input, never emitted.
inline Graph parse_graph(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<EdgeId> edges;
    std::unordered_set<std::uint64_t> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                       : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        if (!have_header) {
            auto ints = detail::parse_int_line(line, 2);
            if (!ints) throw ParseError(line_no, "expected header \"n m\"");
            n = (*ints)[0];
            m = (*ints)[1];
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than declared in header");
        auto ints = detail::parse_int_line(line, 2);
        if (!ints) throw ParseError(line_no, "expected edge line \"a b\"");
        long long a = (*ints)[0], b = (*ints)[1];
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
        if (a == b) throw ParseError(line_no, "self-loop");
        EdgeId e(static_cast<int>(a), static_cast<int>(b));
        std::uint64_t key = (static_cast<std::uint64_t>(e.a) << 32) | static_cast<std::uint32_t>(e.b);
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

/// Inverse of parse_graph, bit-exact: "n m", then edges with a < b in
/// lexicographic order, one per line, newline-terminated.
inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const EdgeId& e : g.edges())
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
struct Subgraph {
    Graph graph;
    std::vector<int> to_global;  // local index -> original vertex
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    std::vector<EdgeId> edges;
    for (const EdgeId& e : g.edges())
        if (local[e.a] >= 0 && local[e.b] >= 0)
            edges.emplace_back(local[e.a], local[e.b]);
    Subgraph s;
    s.graph = Graph(static_cast<int>(vertices.size()), edges);
    s.to_global.assign(vertices.begin(), vertices.end());
    return s;
}

}  // namespace meg
