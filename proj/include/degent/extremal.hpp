#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "degent/entropy.hpp"
#include "degent/graph.hpp"

namespace degent {

struct ExtremalResult {
    double bound = 0.0;
    mpz_class exact_key_at_bound = 1;
    std::vector<Graph> graphs;
    bool attained = false;
};

// Largest k with k(k-1)/2 <= m, by integer search. t_star is the leftover
// m - C(k_star, 2); it is always < k_star.
int k_star(long m);
int t_star(long m);
int sigma(long x);  // 0 if x == 0, else 1

// Minimum entropy over (n,m)-graphs, with the unique extremal graph
// K(k*,t*) plus isolated padding. Throws when m is out of range or the
// extremal graph does not fit in n vertices ("theorem precondition unmet").
ExtremalResult min_entropy_general(int n, long m);

// Lower bound 1 + log2(sqrt(m)) over (n,m)-bipartite graphs, with every
// K_{q,b} (qb = m, q <= b, q+b <= n) plus padding. attained = false with an
// empty graph list when no factorization fits.
ExtremalResult min_entropy_bipartite(int n, long m);

// Minimum over trees on n vertices: the star.
ExtremalResult star_bound(int n);

// Bipartite graph with q = floor(m/b) X-vertices joined to all b Y-vertices
// and one partial X-vertex of degree r = m - qb, padded to n vertices.
Graph construct_B(int n, long m, int b);

struct Table1Cell {
    int n = 0;
    long m = 0;
    std::vector<std::string> names;  // minimizers, rendered K_{q,b} u Kbar_j / B(n,m,b)
    double min_i_d = 0.0;
    std::string exact_key;
    bool bound_attained = false;  // complete-bipartite bound 1 + log2(sqrt(m))
};

// Minimum-entropy bipartite cells for 2 <= n <= n_max (default 6), computed
// by exhaustive search and rendered with the standard family names.
std::vector<Table1Cell> table1(int n_max = 6);

// Renders a minimizer graph as "K_{q,b}", "B(n,m,b)", etc., with
// " u Kbar_j" appended for isolated padding.
std::string describe_bipartite_minimizer(const Graph& g);

}  // namespace degent
