#include "degent/recognition.hpp"

#include <algorithm>

#include "degent/sequences.hpp"

namespace degent {

namespace {

std::optional<std::array<int, 4>> find_threshold_obstruction(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v == u) continue;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                for (int x : g.neighbors(w)) {
                    if (x == u || x == v || x == w) continue;
                    if (!g.has_edge(u, w) && !g.has_edge(v, x))
                        return std::array<int, 4>{u, v, w, x};
                }
            }
        }
    return std::nullopt;
}

}  // namespace

RecognitionResult is_threshold(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> active(static_cast<size_t>(n), true);
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!active[static_cast<size_t>(v)]) continue;
            int deg = 0;
            for (int u : g.neighbors(v))
                if (active[static_cast<size_t>(u)]) ++deg;
            if (deg == 0 || deg == remaining - 1) pick = v;
        }
        if (pick < 0) return {false, find_threshold_obstruction(g)};
        active[static_cast<size_t>(pick)] = false;
        --remaining;
    }
    return {true, std::nullopt};
}

RecognitionResult threshold_by_forbidden_config(const Graph& g) {
    if (auto w = find_threshold_obstruction(g)) return {false, w};
    return {true, std::nullopt};
}

RecognitionResult is_difference(const Graph& g) {
    auto color = bipartition(g);
    if (!color) return {false, std::nullopt};
    std::vector<int> xs, ys;
    for (int v = 0; v < g.vertex_count(); ++v)
        ((*color)[static_cast<size_t>(v)] == 0 ? xs : ys).push_back(v);
    for (int x1 : xs)
        for (int y1 : g.neighbors(x1))
            for (int x2 : xs) {
                if (x2 == x1 || g.has_edge(x2, y1)) continue;
                for (int y2 : g.neighbors(x2))
                    if (y2 != y1 && !g.has_edge(x1, y2))
                        return {false, std::array<int, 4>{x1, y1, x2, y2}};
            }
    return {true, std::nullopt};
}

bool difference_by_conjugate_condition(const Graph& g_in) {
    Graph g = strip_isolated(g_in);
    auto color = bipartition(g);
    if (!color) return false;
    DegreeSequence dx, dy;
    for (int v = 0; v < g.vertex_count(); ++v)
        ((*color)[static_cast<size_t>(v)] == 0 ? dx : dy).push_back(g.degree(v));
    std::sort(dx.begin(), dx.end(), std::greater<>());
    std::sort(dy.begin(), dy.end(), std::greater<>());
    DegreeSequence conj = conjugate(dy);
    const size_t len = std::max(dx.size(), conj.size());
    dx.resize(len, 0);
    conj.resize(len, 0);
    return dx == conj;
}

}  // namespace degent
