#include "degent.h"

#include <cstring>
#include <sstream>
#include <string>

#include "degent/graph.hpp"
#include "degent/json_io.hpp"
#include "degent/recognition.hpp"
#include "degent/verify.hpp"

struct degent_graph {
    degent::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
degent_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DEGENT_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return DEGENT_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DEGENT_ERR_INTERNAL;
    }
}

std::vector<long> parse_args(const std::string& s, size_t expected) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stol(tok));
    if (out.size() != expected)
        throw std::invalid_argument("family spec expects " + std::to_string(expected) +
                                    " parameters");
    return out;
}

degent::Graph build_family(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec needs \"name:args\"");
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    using namespace degent;
    if (name == "complete") return make_complete(static_cast<int>(parse_args(args, 1)[0]));
    if (name == "complete_bipartite") {
        auto a = parse_args(args, 2);
        return make_complete_bipartite(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (name == "star") return make_star(static_cast<int>(parse_args(args, 1)[0]));
    if (name == "empty") return make_empty(static_cast<int>(parse_args(args, 1)[0]));
    if (name == "kkt") {
        auto a = parse_args(args, 2);
        return make_clique_plus_pendant(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (name == "b") {
        auto a = parse_args(args, 3);
        return construct_B(static_cast<int>(a[0]), a[1], static_cast<int>(a[2]));
    }
    throw std::invalid_argument("unknown family \"" + name + "\"");
}

}  // namespace

extern "C" {

const char* degent_last_error(void) { return g_last_error.c_str(); }

void degent_string_free(char* s) { delete[] s; }

void degent_graph_free(degent_graph* g) { delete g; }

degent_status degent_graph_parse(const char* text, degent_graph** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    try {
        *out = new degent_graph{degent::parse_edge_list(text)};
        g_last_error.clear();
        return DEGENT_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DEGENT_ERR_PARSE;
    }
}

degent_status degent_graph_build(const char* family_spec, int pad, degent_graph** out) {
    if (!family_spec || !out) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new degent_graph{degent::pad_isolated(build_family(family_spec), pad)}; });
}

degent_status degent_graph_complement(const degent_graph* g, degent_graph** out) {
    if (!g || !out) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new degent_graph{degent::complement(g->g)}; });
}

degent_status degent_graph_union(const degent_graph* g, const degent_graph* h,
                                 degent_graph** out) {
    if (!g || !h || !out) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new degent_graph{degent::graph_union(g->g, h->g)}; });
}

degent_status degent_graph_emit(const degent_graph* g, char** out_text) {
    if (!g || !out_text) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out_text = dup_string(degent::emit_edge_list(g->g)); });
}

degent_status degent_graph_entropy(const degent_graph* g, char** out_json) {
    if (!g || !out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto report = degent::compute_entropy(degent::degree_sequence(g->g));
        *out_json = dup_string(degent::entropy_to_json(report).dump());
    });
}

degent_status degent_recognize(const degent_graph* g, const char* kind, char** out_json) {
    if (!g || !kind || !out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::string k = kind;
        degent::RecognitionResult r;
        if (k == "threshold")
            r = degent::is_threshold(g->g);
        else if (k == "difference")
            r = degent::is_difference(g->g);
        else
            throw std::invalid_argument("kind must be \"threshold\" or \"difference\"");
        *out_json = dup_string(degent::recognition_to_json(r, k).dump());
    });
}

degent_status degent_min_entropy(int n, long m, int bipartite, char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        degent::ExtremalResult r = bipartite ? degent::min_entropy_bipartite(n, m)
                                             : degent::min_entropy_general(n, m);
        *out_json = dup_string(degent::extremal_to_json(r, n, m, bipartite != 0).dump());
    });
}

degent_status degent_verify(const char* theorem, int max_n, const char* mode, int threads,
                            char** out_json, long* out_failures) {
    if (!theorem || !out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const std::string t = theorem;
        const std::string mode_str = mode ? mode : "graphs";
        degent::OracleMode om;
        if (mode_str == "graphs")
            om = degent::OracleMode::graphs;
        else if (mode_str == "sequences")
            om = degent::OracleMode::sequences;
        else
            throw std::invalid_argument("mode must be \"sequences\" or \"graphs\"");
        degent::VerificationReport rep;
        if (t == "1")
            rep = degent::check_theorem1(max_n, threads, om);
        else if (t == "2")
            rep = degent::check_theorem2(max_n, threads, om);
        else if (t == "le1")
            rep = degent::check_majorization_all(max_n, threads);
        else if (t == "le7")
            rep = degent::check_minimizers_difference(max_n, threads);
        else if (t == "le8")
            rep = degent::check_minimizers_threshold(max_n, threads);
        else if (t == "cor2")
            rep = degent::check_corollary2(max_n);
        else
            throw std::invalid_argument("theorem must be one of 1, 2, le1, le7, le8, cor2");
        if (out_failures) *out_failures = static_cast<long>(rep.failures.size());
        *out_json = dup_string(degent::report_to_json(rep).dump());
    });
}

degent_status degent_table1(int n_max, char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out_json = dup_string(degent::table1_to_json(degent::table1(n_max)).dump());
    });
}

degent_status degent_explore_b(int n, long m, char** out_json) {
    if (!out_json) {
        g_last_error = "null argument";
        return DEGENT_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out_json = dup_string(degent::explore_to_json(degent::explore_problem1(n, m)).dump());
    });
}

}  // extern "C"
