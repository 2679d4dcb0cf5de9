#include "degent/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "degent/recognition.hpp"

namespace degent {

namespace {

constexpr double kTol = 1e-9;

std::string cell_name(int n, long m) {
    return "n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

std::string seq_to_string(const DegreeSequence& d) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
    out << ']';
    return out.str();
}

mpz_class key_of(const DegreeSequence& d) {
    mpz_class key = 1;
    for (int v : d) {
        if (v < 2) continue;
        mpz_class base = v, pow;
        mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(v));
        key *= pow;
    }
    return key;
}

template <typename F>
void for_each_combination(int total, int k, F&& fn) {
    if (k > total || k < 0) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == total - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

void run_parallel(size_t count, int threads, const std::function<void(size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = threads > 0 ? static_cast<size_t>(threads) : (hw ? hw : 1);
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Minimum over a set of labeled edge pools: pass 1 finds the minimizing
// degree sequences, pass 2 canonicalizes only the graphs attaining them.
MinimizerSet min_over_edge_pools(int n, long m,
                                 const std::vector<std::vector<std::pair<int, int>>>& pools,
                                 bool want_graphs) {
    std::map<DegreeSequence, mpz_class> keys;
    mpz_class best = -1;
    std::vector<int> deg(static_cast<size_t>(n));
    DegreeSequence sorted;
    for (const auto& pool : pools) {
        for_each_combination(static_cast<int>(pool.size()), static_cast<int>(m),
                             [&](const std::vector<int>& idx) {
                                 std::fill(deg.begin(), deg.end(), 0);
                                 for (int i : idx) {
                                     ++deg[static_cast<size_t>(pool[static_cast<size_t>(i)].first)];
                                     ++deg[static_cast<size_t>(pool[static_cast<size_t>(i)].second)];
                                 }
                                 sorted = deg;
                                 std::sort(sorted.begin(), sorted.end(), std::greater<>());
                                 auto it = keys.find(sorted);
                                 if (it == keys.end())
                                     it = keys.emplace(sorted, key_of(sorted)).first;
                                 if (best < 0 || it->second > best) best = it->second;
                             });
    }
    MinimizerSet out;
    out.best_key = best;
    for (const auto& [seq, key] : keys)
        if (key == best) out.sequences.push_back(seq);
    out.min_i_d = compute_entropy(out.sequences.front()).i_d;
    if (want_graphs) {
        std::set<DegreeSequence> winners(out.sequences.begin(), out.sequences.end());
        std::set<CanonicalKey> seen;
        for (const auto& pool : pools) {
            for_each_combination(static_cast<int>(pool.size()), static_cast<int>(m),
                                 [&](const std::vector<int>& idx) {
                                     std::fill(deg.begin(), deg.end(), 0);
                                     for (int i : idx) {
                                         ++deg[static_cast<size_t>(pool[static_cast<size_t>(i)].first)];
                                         ++deg[static_cast<size_t>(pool[static_cast<size_t>(i)].second)];
                                     }
                                     sorted = deg;
                                     std::sort(sorted.begin(), sorted.end(), std::greater<>());
                                     if (!winners.count(sorted)) return;
                                     Graph g(n);
                                     for (int i : idx) {
                                         auto [u, v] = pool[static_cast<size_t>(i)];
                                         g.add_edge(u, v);
                                     }
                                     if (seen.insert(canonical_key(g)).second)
                                         out.graphs.push_back(std::move(g));
                                 });
        }
    }
    return out;
}

}  // namespace

MinimizerSet brute_min_general(int n, long m, OracleMode mode) {
    const long max_m = static_cast<long>(n) * (n - 1) / 2;
    if (m < 1 || m > max_m) throw std::invalid_argument("m out of range");
    if (mode == OracleMode::sequences) {
        if (n > 10) throw std::invalid_argument("sequences mode limited to n <= 10");
        MinimizerSet out;
        mpz_class best = -1;
        std::vector<std::pair<DegreeSequence, mpz_class>> all;
        for (auto& seq : enumerate_graphical(n, static_cast<int>(m))) {
            mpz_class key = key_of(seq);
            if (best < 0 || key > best) best = key;
            all.emplace_back(std::move(seq), std::move(key));
        }
        out.best_key = best;
        for (auto& [seq, key] : all)
            if (key == best) out.sequences.push_back(std::move(seq));
        out.min_i_d = compute_entropy(out.sequences.front()).i_d;
        return out;
    }
    if (n > 7) throw std::invalid_argument("graphs mode limited to n <= 7");
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
    return min_over_edge_pools(n, m, {pool}, true);
}

MinimizerSet brute_min_bipartite(int n, long m, OracleMode mode) {
    const long cap = static_cast<long>((n + 1) / 2) * (n / 2);
    if (m < 1 || m > cap) throw std::invalid_argument("m out of range");
    if (mode == OracleMode::sequences) {
        if (n > 10) throw std::invalid_argument("sequences mode limited to n <= 10");
        MinimizerSet out;
        mpz_class best = -1;
        std::set<DegreeSequence> uniq;
        std::vector<std::pair<DegreeSequence, mpz_class>> all;
        for (const auto& pair : enumerate_bigraphical(n, static_cast<int>(m))) {
            DegreeSequence combined = pair.x;
            combined.insert(combined.end(), pair.y.begin(), pair.y.end());
            std::sort(combined.begin(), combined.end(), std::greater<>());
            if (!uniq.insert(combined).second) continue;
            mpz_class key = key_of(combined);
            if (best < 0 || key > best) best = key;
            all.emplace_back(std::move(combined), std::move(key));
        }
        out.best_key = best;
        for (auto& [seq, key] : all)
            if (key == best) out.sequences.push_back(std::move(seq));
        std::sort(out.sequences.begin(), out.sequences.end());
        out.min_i_d = compute_entropy(out.sequences.front()).i_d;
        return out;
    }
    if (n > 7) throw std::invalid_argument("graphs mode limited to n <= 7");
    std::vector<std::vector<std::pair<int, int>>> pools;
    for (int a = 1; 2 * a <= n; ++a) {
        std::vector<std::pair<int, int>> pool;
        for (int u = 0; u < a; ++u)
            for (int v = a; v < n; ++v) pool.emplace_back(u, v);
        pools.push_back(std::move(pool));
    }
    return min_over_edge_pools(n, m, pools, true);
}

namespace {

struct Cell {
    int n;
    long m;
};

std::vector<Cell> general_cells(int n_max) {
    std::vector<Cell> cells;
    for (int n = 2; n <= n_max; ++n)
        for (long m = 1; m <= static_cast<long>(n) * (n - 1) / 2; ++m) cells.push_back({n, m});
    return cells;
}

std::vector<Cell> bipartite_cells(int n_max) {
    std::vector<Cell> cells;
    for (int n = 2; n <= n_max; ++n)
        for (long m = 1; m <= static_cast<long>((n + 1) / 2) * (n / 2); ++m)
            cells.push_back({n, m});
    return cells;
}

VerificationReport run_cells(const std::string& scope, const std::vector<Cell>& cells, int threads,
                             const std::function<void(const Cell&, VerificationReport&)>& fn) {
    std::vector<VerificationReport> parts(cells.size());
    run_parallel(cells.size(), threads, [&](size_t i) { fn(cells[i], parts[i]); });
    VerificationReport merged;
    merged.scope = scope;
    for (auto& p : parts) {
        merged.checked_count += p.checked_count;
        merged.failures.insert(merged.failures.end(), p.failures.begin(), p.failures.end());
        merged.minimizer_sets.merge(p.minimizer_sets);
    }
    return merged;
}

std::set<CanonicalKey> canonical_set(const std::vector<Graph>& gs) {
    std::set<CanonicalKey> out;
    for (const auto& g : gs) out.insert(canonical_key(g));
    return out;
}

}  // namespace

VerificationReport check_theorem1(int n_max, int threads, OracleMode mode) {
    if (mode == OracleMode::graphs && n_max > 7)
        throw std::invalid_argument("graphs-mode verification limited to n <= 7");
    return run_cells(
        "theorem1: 2 <= n <= " + std::to_string(n_max), general_cells(n_max), threads,
        [mode](const Cell& c, VerificationReport& rep) {
            const auto name = cell_name(c.n, c.m);
            ExtremalResult ex = min_entropy_general(c.n, c.m);
            MinimizerSet ms = brute_min_general(c.n, c.m, mode);
            ++rep.checked_count;
            if (std::abs(ms.min_i_d - ex.bound) > kTol)
                rep.failures.push_back({name, "bound " + std::to_string(ex.bound),
                                        "oracle " + std::to_string(ms.min_i_d)});
            if (ms.best_key != ex.exact_key_at_bound)
                rep.failures.push_back({name, "key " + key_to_string(ex.exact_key_at_bound),
                                        "key " + key_to_string(ms.best_key)});
            const DegreeSequence named = degree_sequence(ex.graphs.front());
            if (ms.sequences.size() != 1 || ms.sequences.front() != named)
                rep.failures.push_back({name, "unique minimizing sequence " + seq_to_string(named),
                                        std::to_string(ms.sequences.size()) + " sequences"});
            if (mode == OracleMode::graphs &&
                (ms.graphs.size() != 1 || !isomorphic(ms.graphs.front(), ex.graphs.front())))
                rep.failures.push_back({name, "unique minimizer K(k*,t*) u Kbar",
                                        std::to_string(ms.graphs.size()) + " classes"});
            rep.minimizer_sets.emplace(name, std::move(ms));
        });
}

VerificationReport check_theorem2(int n_max, int threads, OracleMode mode) {
    if (mode == OracleMode::graphs && n_max > 7)
        throw std::invalid_argument("graphs-mode verification limited to n <= 7");
    return run_cells(
        "theorem2: 2 <= n <= " + std::to_string(n_max), bipartite_cells(n_max), threads,
        [mode](const Cell& c, VerificationReport& rep) {
            const auto name = cell_name(c.n, c.m);
            ExtremalResult ex = min_entropy_bipartite(c.n, c.m);
            MinimizerSet ms = brute_min_bipartite(c.n, c.m, mode);
            ++rep.checked_count;
            if (ex.attained) {
                if (std::abs(ms.min_i_d - ex.bound) > kTol)
                    rep.failures.push_back({name, "bound " + std::to_string(ex.bound),
                                            "oracle " + std::to_string(ms.min_i_d)});
                if (ms.best_key != ex.exact_key_at_bound)
                    rep.failures.push_back({name, "key m^m = " + key_to_string(ex.exact_key_at_bound),
                                            "key " + key_to_string(ms.best_key)});
                if (mode == OracleMode::graphs &&
                    canonical_set(ms.graphs) != canonical_set(ex.graphs))
                    rep.failures.push_back({name, "minimizers = complete-bipartite factorizations",
                                            std::to_string(ms.graphs.size()) + " classes"});
            } else {
                // no factorization fits: the true minimum must exceed the bound
                if (ms.best_key >= ex.exact_key_at_bound)
                    rep.failures.push_back({name, "oracle key < m^m (bound unattained)",
                                            "key " + key_to_string(ms.best_key)});
            }
            rep.minimizer_sets.emplace(name, std::move(ms));
        });
}

VerificationReport check_minimizers_threshold(int n_max, int threads) {
    if (n_max > 7) throw std::invalid_argument("graphs-mode verification limited to n <= 7");
    return run_cells("minimizers-threshold: 2 <= n <= " + std::to_string(n_max),
                     general_cells(n_max), threads, [](const Cell& c, VerificationReport& rep) {
                         MinimizerSet ms = brute_min_general(c.n, c.m, OracleMode::graphs);
                         for (const auto& g : ms.graphs) {
                             ++rep.checked_count;
                             if (!is_threshold(g).verdict)
                                 rep.failures.push_back({cell_name(c.n, c.m), "threshold minimizer",
                                                         "non-threshold graph found"});
                         }
                     });
}

VerificationReport check_minimizers_difference(int n_max, int threads) {
    if (n_max > 7) throw std::invalid_argument("graphs-mode verification limited to n <= 7");
    return run_cells("minimizers-difference: 2 <= n <= " + std::to_string(n_max),
                     bipartite_cells(n_max), threads, [](const Cell& c, VerificationReport& rep) {
                         MinimizerSet ms = brute_min_bipartite(c.n, c.m, OracleMode::graphs);
                         for (const auto& g : ms.graphs) {
                             ++rep.checked_count;
                             if (!is_difference(g).verdict)
                                 rep.failures.push_back({cell_name(c.n, c.m), "difference minimizer",
                                                         "non-difference graph found"});
                         }
                     });
}

VerificationReport check_majorization(int n, long m) {
    VerificationReport rep;
    rep.scope = "majorization: " + cell_name(n, m);
    auto seqs = enumerate_graphical(n, static_cast<int>(m));
    std::vector<mpz_class> keys;
    keys.reserve(seqs.size());
    for (const auto& s : seqs) keys.push_back(key_of(s));
    for (size_t i = 0; i < seqs.size(); ++i) {
        for (size_t j = i + 1; j < seqs.size(); ++j) {
            MajorizeResult r = majorize_compare(seqs[i], seqs[j]);
            if (r == MajorizeResult::incomparable) continue;
            ++rep.checked_count;
            const bool ok = (r == MajorizeResult::a_strictly_majorizes && keys[i] > keys[j]) ||
                            (r == MajorizeResult::b_strictly_majorizes && keys[j] > keys[i]);
            if (!ok)
                rep.failures.push_back({cell_name(n, m) + " " + seq_to_string(seqs[i]) + " vs " +
                                            seq_to_string(seqs[j]),
                                        "strict key order along majorization", "violated"});
        }
    }
    return rep;
}

VerificationReport check_majorization_all(int n_max, int threads) {
    return run_cells("majorization: 2 <= n <= " + std::to_string(n_max), general_cells(n_max),
                     threads, [](const Cell& c, VerificationReport& rep) {
                         VerificationReport one = check_majorization(c.n, c.m);
                         rep.checked_count = one.checked_count;
                         rep.failures = std::move(one.failures);
                     });
}

VerificationReport check_corollary2(int n_max) {
    if (n_max > 8) throw std::invalid_argument("tree oracle limited to n <= 8");
    VerificationReport rep;
    rep.scope = "corollary2: 2 <= n <= " + std::to_string(n_max);
    for (int n = 2; n <= n_max; ++n) {
        std::map<DegreeSequence, mpz_class> keys;
        if (n == 2) {
            keys.emplace(DegreeSequence{1, 1}, 1);
            ++rep.checked_count;
        } else {
            // all n^(n-2) Prufer codes; degree = 1 + multiplicity in the code
            std::vector<int> code(static_cast<size_t>(n - 2), 0);
            while (true) {
                DegreeSequence deg(static_cast<size_t>(n), 1);
                for (int c : code) ++deg[static_cast<size_t>(c)];
                std::sort(deg.begin(), deg.end(), std::greater<>());
                if (!keys.count(deg)) keys.emplace(deg, key_of(deg));
                ++rep.checked_count;
                int i = n - 3;
                while (i >= 0 && code[static_cast<size_t>(i)] == n - 1) {
                    code[static_cast<size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
                ++code[static_cast<size_t>(i)];
            }
        }
        mpz_class best = -1;
        for (const auto& [seq, key] : keys)
            if (key > best) best = key;
        std::vector<DegreeSequence> winners;
        for (const auto& [seq, key] : keys)
            if (key == best) winners.push_back(seq);
        DegreeSequence star(static_cast<size_t>(n), 1);
        star.front() = n - 1;
        const std::string name = "n=" + std::to_string(n);
        if (winners.size() != 1 || winners.front() != star)
            rep.failures.push_back({name, "unique tree minimizer is the star",
                                    std::to_string(winners.size()) + " minimizing sequences"});
        const double expected = 1.0 + 0.5 * std::log2(static_cast<double>(n - 1));
        const double got = compute_entropy(star).i_d;
        if (std::abs(got - expected) > kTol)
            rep.failures.push_back({name, "star value " + std::to_string(expected),
                                    std::to_string(got)});
        MinimizerSet ms;
        ms.best_key = best;
        ms.sequences = std::move(winners);
        ms.min_i_d = got;
        rep.minimizer_sets.emplace(name + ",m=" + std::to_string(n - 1), std::move(ms));
    }
    return rep;
}

ExploreResult explore_problem1(int n, long m) {
    ExploreResult res;
    res.n = n;
    res.m = m;
    for (int b = 1; b <= m; ++b) {
        const long q = m / b, r = m - b * q;
        if (q + sigma(r) + b > n) continue;
        ExploreRow row;
        row.b = b;
        Graph g = construct_B(n, m, b);
        row.degrees = degree_sequence(g);
        row.report = compute_entropy(row.degrees);
        res.rows.push_back(std::move(row));
    }
    if (res.rows.empty()) throw std::invalid_argument("no valid b for B(n,m,b)");
    mpz_class best = -1;
    for (const auto& row : res.rows)
        if (row.report.exact_key > best) best = row.report.exact_key;
    for (const auto& row : res.rows)
        if (row.report.exact_key == best) res.argmin_b.push_back(row.b);
    if (n <= 7) {
        MinimizerSet ms = brute_min_bipartite(n, m, OracleMode::sequences);
        res.oracle_checked = true;
        res.oracle_best_key = ms.best_key;
        res.family_attains_oracle = (best == ms.best_key);
    }
    if (n == 6 && m == 7)
        res.note = "exact keys give I_d(B(6,7,4)) < I_d(B(6,7,3)) (keys 442368 > 314928); "
                   "an often-quoted observation states the reverse direction, which disagrees "
                   "with direct computation and with the minimizer table at n=6, m=7";
    return res;
}

}  // namespace degent
