#include "degent/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "degent/verify.hpp"

namespace degent {

int k_star(long m) {
    if (m < 1) throw std::invalid_argument("k_star requires m >= 1");
    int k = 2;
    while (static_cast<long>(k + 1) * k / 2 <= m) ++k;
    return k;
}

int t_star(long m) {
    const int k = k_star(m);
    return static_cast<int>(m - static_cast<long>(k) * (k - 1) / 2);
}

int sigma(long x) { return x == 0 ? 0 : 1; }

ExtremalResult min_entropy_general(int n, long m) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (m < 1 || m > static_cast<long>(n) * (n - 1) / 2)
        throw std::invalid_argument("m out of range [1, C(n,2)]");
    const int k = k_star(m);
    const int t = t_star(m);
    const int core = k + sigma(t);
    if (n < core)
        throw std::invalid_argument("theorem precondition unmet: extremal graph needs " +
                                    std::to_string(core) + " vertices");
    const double bound =
        std::log2(2.0 * static_cast<double>(m)) -
        (t * k * (k >= 2 ? std::log2(static_cast<double>(k)) : 0.0) +
         static_cast<double>(k - t) * (k - 1) * (k >= 2 ? std::log2(static_cast<double>(k - 1)) : 0.0) +
         (t >= 1 ? t * std::log2(static_cast<double>(t)) : 0.0)) /
            (2.0 * static_cast<double>(m));
    ExtremalResult res;
    res.bound = bound;
    Graph g = pad_isolated(make_clique_plus_pendant(k, t), n - core);
    res.exact_key_at_bound = compute_entropy(degree_sequence(g)).exact_key;
    res.graphs.push_back(std::move(g));
    res.attained = true;
    return res;
}

ExtremalResult min_entropy_bipartite(int n, long m) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    const long cap = static_cast<long>((n + 1) / 2) * (n / 2);
    if (m < 1 || m > cap)
        throw std::invalid_argument("m out of range [1, ceil(n/2)*floor(n/2)]");
    ExtremalResult res;
    res.bound = 1.0 + 0.5 * std::log2(static_cast<double>(m));
    mpz_class mm = m;
    mpz_pow_ui(res.exact_key_at_bound.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(m));
    for (long q = 1; q * q <= m; ++q) {
        if (m % q != 0) continue;
        const long b = m / q;
        if (q + b > n) continue;
        res.graphs.push_back(pad_isolated(
            make_complete_bipartite(static_cast<int>(q), static_cast<int>(b)),
            n - static_cast<int>(q + b)));
    }
    res.attained = !res.graphs.empty();
    return res;
}

ExtremalResult star_bound(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    ExtremalResult res;
    res.bound = 1.0 + 0.5 * std::log2(static_cast<double>(n - 1));
    mpz_class base = n - 1;
    mpz_pow_ui(res.exact_key_at_bound.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(n - 1));
    res.graphs.push_back(make_star(n));
    res.attained = true;
    return res;
}

Graph construct_B(int n, long m, int b) {
    if (b < 1 || b > m) throw std::invalid_argument("need 1 <= b <= m");
    const long q = m / b;
    const long r = m - b * q;
    const long used = q + sigma(r) + b;
    if (used > n)
        throw std::invalid_argument("B(n,m,b) needs " + std::to_string(used) + " vertices");
    Graph g(n);
    const int x_count = static_cast<int>(q + sigma(r));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, x_count + j);
    for (int s = 0; s < r; ++s) g.add_edge(static_cast<int>(q), x_count + s);
    return g;
}

std::string describe_bipartite_minimizer(const Graph& g) {
    const int j = isolated_count(g);
    Graph core = strip_isolated(g);
    const long m = core.edge_count();
    std::ostringstream name;
    auto color = bipartition(core);
    if (!color) return "<non-bipartite>";
    long sx = 0, sy = 0;
    for (int c : *color) (c == 0 ? sx : sy)++;
    if (sx > sy) std::swap(sx, sy);
    if (m == sx * sy) {
        name << "K_{" << sx << "," << sy << "}";
    } else {
        // a B(n,m,b) shape; b is the degree of the domination vertex
        int b_guess = 0;
        for (int v = 0; v < core.vertex_count(); ++v) b_guess = std::max(b_guess, core.degree(v));
        int found = 0;
        if (b_guess >= 1 && b_guess <= m) {
            const long q = m / b_guess, r = m - b_guess * q;
            if (q + sigma(r) + b_guess <= core.vertex_count() &&
                isomorphic(construct_B(core.vertex_count(), m, b_guess), core))
                found = b_guess;
        }
        for (int b = 1; b <= m && found == 0; ++b) {
            const long q = m / b, r = m - b * q;
            if (q + sigma(r) + b > core.vertex_count()) continue;
            if (isomorphic(construct_B(core.vertex_count(), m, b), core)) found = b;
        }
        if (found == 0) return "<unnamed bipartite minimizer>";
        name << "B(" << core.vertex_count() + j << "," << m << "," << found << ")";
        return name.str();  // padding is part of the B(n,.,.) vertex count
    }
    if (j > 0) name << " u Kbar_" << j;
    return name.str();
}

std::vector<Table1Cell> table1(int n_max) {
    std::vector<Table1Cell> cells;
    for (int n = 2; n <= n_max; ++n) {
        const long cap = static_cast<long>((n + 1) / 2) * (n / 2);
        for (long m = 1; m <= cap; ++m) {
            MinimizerSet ms = brute_min_bipartite(n, m, OracleMode::graphs);
            Table1Cell cell;
            cell.n = n;
            cell.m = m;
            cell.min_i_d = ms.min_i_d;
            cell.exact_key = key_to_string(ms.best_key);
            for (const auto& g : ms.graphs) cell.names.push_back(describe_bipartite_minimizer(g));
            std::sort(cell.names.begin(), cell.names.end());
            mpz_class mm = m, bound_key;
            mpz_pow_ui(bound_key.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(m));
            cell.bound_attained = (ms.best_key == bound_key);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace degent
