#include "degent/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace degent {

int Graph::edge_count() const {
    size_t total = 0;
    for (const auto& nb : adj_) total += nb.size();
    return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    auto& a = adj_[static_cast<size_t>(u)];
    auto& b = adj_[static_cast<size_t>(v)];
    a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    b.insert(std::upper_bound(b.begin(), b.end(), u), u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;
    Graph g;
    long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                parse_fail(line_no, "expected header \"n m\"");
            std::string junk;
            if (ls >> junk) parse_fail(line_no, "trailing tokens after header");
            g = Graph(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected edge \"u v\"");
        std::string junk;
        if (ls >> junk) parse_fail(line_no, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(line_no, "vertex label out of range [1, n]");
        if (u == v) parse_fail(line_no, "self-loop");
        if (++seen > m) parse_fail(line_no, "more edges than declared");
        try {
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } catch (const std::invalid_argument& e) {
            parse_fail(line_no, e.what());
        }
    }
    if (n < 0) throw std::invalid_argument("line 1: missing header \"n m\"");
    if (seen != m)
        throw std::invalid_argument("declared m = " + std::to_string(m) + " but found " +
                                    std::to_string(seen) + " edges");
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph make_complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete bipartite needs s, t >= 1");
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

Graph make_star(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    return make_complete_bipartite(1, n - 1);
}

Graph make_empty(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return Graph(n);
}

Graph make_clique_plus_pendant(int k, int t) {
    if (k < 1 || t < 0 || t > k)
        throw std::invalid_argument("need k >= 1 and 0 <= t <= k");
    if (t == 0) return make_complete(k);
    Graph g(k + 1);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int v = 0; v < t; ++v) g.add_edge(k, v);
    return g;
}

Graph pad_isolated(const Graph& g, int extra) {
    if (extra < 0) throw std::invalid_argument("negative padding");
    return graph_union(g, Graph(extra));
}

Graph graph_union(const Graph& g, const Graph& h) {
    Graph out(g.vertex_count() + h.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    const int off = g.vertex_count();
    for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

CanonicalKey canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical key limited to n <= 10");
    auto pair_bit = [n](int i, int j) {
        // upper-triangular index of {i, j}, i < j
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    auto es = g.edges();
    do {
        std::uint64_t bits = 0;
        for (auto [u, v] : es) {
            int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            bits |= 1ULL << pair_bit(a, b);
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) best = 0;
    return CanonicalKey{n, best};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                auto& cv = color[static_cast<size_t>(v)];
                if (cv == -1) {
                    cv = 1 - color[static_cast<size_t>(u)];
                    q.push(v);
                } else if (cv == color[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

Graph strip_isolated(const Graph& g) {
    std::vector<int> map(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) map[static_cast<size_t>(v)] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        out.add_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
    return out;
}

int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) ++c;
    return c;
}

}  // namespace degent
