#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degent {

// Simple labeled undirected graph. Vertices are 0-based internally;
// the edge-list text format uses 1-based labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    // Throws std::invalid_argument on self-loops, duplicates, out-of-range labels.
    void add_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

private:
    std::vector<std::vector<int>> adj_;  // each list kept sorted
};

// Equality-comparable isomorphism key, defined for n <= 10. Bits of the
// upper-triangular adjacency matrix minimized over all vertex permutations.
struct CanonicalKey {
    int n = 0;
    std::uint64_t bits = 0;
    auto operator<=>(const CanonicalKey&) const = default;
};

// Edge-list text format: '#' comment lines, then "n m", then m lines "u v"
// with 1 <= u < v <= n. Errors carry the offending 1-based line number.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

Graph make_complete(int k);
Graph make_complete_bipartite(int s, int t);
Graph make_star(int n);   // K_{1,n-1} on n vertices
Graph make_empty(int n);
// K_k plus one vertex adjacent to t of its vertices; t = 0 yields K_k itself.
Graph make_clique_plus_pendant(int k, int t);

Graph pad_isolated(const Graph& g, int extra);
Graph graph_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);  // non-increasing

CanonicalKey canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Proper 2-coloring (0 = side X, 1 = side Y) if bipartite; per component the
// lowest-index vertex goes to side X, isolated vertices go to side X.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Drops all degree-0 vertices, relabeling the rest in order.
Graph strip_isolated(const Graph& g);
int isolated_count(const Graph& g);

}  // namespace degent
