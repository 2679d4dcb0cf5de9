#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "degent/entropy.hpp"
#include "degent/extremal.hpp"
#include "degent/graph.hpp"
#include "degent/sequences.hpp"

namespace degent {

enum class OracleMode { sequences, graphs };

// Output of an exhaustive minimum-entropy search at fixed (n, m).
struct MinimizerSet {
    mpz_class best_key;                    // max prod d^d == min I_d
    double min_i_d = 0.0;
    std::vector<DegreeSequence> sequences;  // all minimizing degree sequences
    std::vector<Graph> graphs;              // graphs mode: one per isomorphism class
};

struct Failure {
    std::string instance;
    std::string expected;
    std::string observed;
};

struct VerificationReport {
    std::string scope;
    long checked_count = 0;
    std::vector<Failure> failures;
    // keyed "n=5,m=4"
    std::map<std::string, MinimizerSet> minimizer_sets;
    bool ok() const { return failures.empty(); }
};

// Exhaustive minimum over all (n,m)-graphs. sequences mode enumerates
// graphical degree sequences (n <= 10); graphs mode enumerates edge subsets
// of K_n (n <= 7) and reports one representative per isomorphism class.
MinimizerSet brute_min_general(int n, long m, OracleMode mode);

// Same over (n,m)-bipartite graphs; graphs mode enumerates subgraphs of
// K_{a,n-a} over all splits, deduplicated by canonical key.
MinimizerSet brute_min_bipartite(int n, long m, OracleMode mode);

// Closed-form minimum vs the exhaustive oracle over all feasible (n, m)
// with n <= n_max. graphs mode additionally checks uniqueness of the
// extremal isomorphism class; sequences mode checks bound, exact key and
// the minimizing degree sequences only.
VerificationReport check_theorem1(int n_max, int threads = 0,
                                  OracleMode mode = OracleMode::graphs);

// Bipartite bound 1 + log2(sqrt(m)): attained cells must match the
// complete-bipartite factorizations exactly; unattained cells must exceed
// the bound strictly (exact keys).
VerificationReport check_theorem2(int n_max, int threads = 0,
                                  OracleMode mode = OracleMode::graphs);

// Every graphs-mode minimizer is a threshold graph / difference graph.
VerificationReport check_minimizers_threshold(int n_max, int threads = 0);
VerificationReport check_minimizers_difference(int n_max, int threads = 0);

// Majorization monotonicity over all comparable pairs of graphical
// (n,m)-sequences: keys follow the majorization order strictly.
VerificationReport check_majorization(int n, long m);
VerificationReport check_majorization_all(int n_max, int threads = 0);

// Prufer-code tree oracle: the star is the unique minimizing degree
// sequence among labeled trees, with value 1 + log2(sqrt(n-1)).
VerificationReport check_corollary2(int n_max);

struct ExploreRow {
    int b = 0;
    DegreeSequence degrees;
    EntropyReport report;
};

struct ExploreResult {
    int n = 0;
    long m = 0;
    std::vector<ExploreRow> rows;       // one per valid b, ascending
    std::vector<int> argmin_b;          // b values attaining the family minimum
    bool oracle_checked = false;        // n <= 7: compared against brute force
    bool family_attains_oracle = false; // some B(n,m,b) is a true minimizer
    mpz_class oracle_best_key;
    std::string note;                   // known published-direction discrepancy, if any
};

// Entropy of B(n,m,b) for every valid b, with exact-key comparisons and an
// exhaustive cross-check for n <= 7.
ExploreResult explore_problem1(int n, long m);

}  // namespace degent
