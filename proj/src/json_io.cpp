#include "degent/json_io.hpp"

#include <cmath>

namespace degent {

double round_9dp(double x) { return std::round(x * 1e9) / 1e9; }

Json entropy_to_json(const EntropyReport& r) {
    Json j;
    j["two_m"] = r.two_m;
    j["h_d"] = round_9dp(r.h_d);
    j["i_d"] = round_9dp(r.i_d);
    j["exact_key"] = key_to_string(r.exact_key);
    return j;
}

Json recognition_to_json(const RecognitionResult& r, const std::string& kind) {
    Json j;
    j["kind"] = kind;
    j["verdict"] = r.verdict;
    if (r.witness) {
        // 1-based, matching the edge-list file format
        Json w = Json::array();
        for (int v : *r.witness) w.push_back(v + 1);
        j["witness"] = w;
    }
    return j;
}

Json extremal_to_json(const ExtremalResult& r, int n, long m, bool bipartite) {
    Json j;
    j["n"] = n;
    j["m"] = m;
    j["family"] = bipartite ? "bipartite" : "general";
    j["bound"] = round_9dp(r.bound);
    j["exact_key_at_bound"] = key_to_string(r.exact_key_at_bound);
    j["attained"] = r.attained;
    Json graphs = Json::array();
    for (const auto& g : r.graphs) {
        Json one;
        one["degree_sequence"] = degree_sequence(g);
        one["edge_list"] = emit_edge_list(g);
        graphs.push_back(std::move(one));
    }
    j["graphs"] = std::move(graphs);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["scope"] = r.scope;
    j["checked_count"] = r.checked_count;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json one;
        one["instance"] = f.instance;
        one["expected"] = f.expected;
        one["observed"] = f.observed;
        fails.push_back(std::move(one));
    }
    j["failures"] = std::move(fails);
    Json mins;
    for (const auto& [cell, ms] : r.minimizer_sets) {
        Json one;
        one["min_i_d"] = round_9dp(ms.min_i_d);
        one["best_key"] = key_to_string(ms.best_key);
        one["sequences"] = ms.sequences;
        if (!ms.graphs.empty()) {
            Json gs = Json::array();
            for (const auto& g : ms.graphs) gs.push_back(emit_edge_list(g));
            one["graphs"] = std::move(gs);
        }
        mins[cell] = std::move(one);
    }
    j["minimizers"] = std::move(mins);
    return j;
}

Json table1_to_json(const std::vector<Table1Cell>& cells) {
    Json arr = Json::array();
    for (const auto& c : cells) {
        Json one;
        one["n"] = c.n;
        one["m"] = c.m;
        one["minimizers"] = c.names;
        one["min_i_d"] = round_9dp(c.min_i_d);
        one["exact_key"] = c.exact_key;
        one["complete_bipartite_bound_attained"] = c.bound_attained;
        arr.push_back(std::move(one));
    }
    Json j;
    j["cells"] = std::move(arr);
    return j;
}

Json explore_to_json(const ExploreResult& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json one;
        one["b"] = row.b;
        one["degree_sequence"] = row.degrees;
        one["entropy"] = entropy_to_json(row.report);
        rows.push_back(std::move(one));
    }
    j["rows"] = std::move(rows);
    j["argmin_b"] = r.argmin_b;
    j["oracle_checked"] = r.oracle_checked;
    if (r.oracle_checked) {
        j["oracle_best_key"] = key_to_string(r.oracle_best_key);
        j["family_attains_oracle_minimum"] = r.family_attains_oracle;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace degent
