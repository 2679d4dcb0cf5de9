// Command-line front end: everything goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "degent.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string owned(char* s) {
    std::string out = s ? s : "";
    degent_string_free(s);
    return out;
}

void require_ok(degent_status st) {
    if (st != DEGENT_OK) throw CliError(degent_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphHandle {
    degent_graph* g = nullptr;
    ~GraphHandle() { degent_graph_free(g); }
};

GraphHandle parse_graph_file(const std::string& path) {
    GraphHandle h;
    require_ok(degent_graph_parse(read_file(path).c_str(), &h.g));
    return h;
}

std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", x);
    return buf;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_cell(std::string s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

int cmd_entropy(const std::string& file, bool as_json) {
    GraphHandle h = parse_graph_file(file);
    char* out = nullptr;
    require_ok(degent_graph_entropy(h.g, &out));
    json j = json::parse(owned(out));
    if (as_json) {
        print_json(j);
    } else {
        std::cout << "2m        = " << j["two_m"].get<long>() << '\n'
                  << "h_d       = " << fmt9(j["h_d"].get<double>()) << '\n'
                  << "i_d       = " << fmt9(j["i_d"].get<double>()) << '\n'
                  << "exact_key = " << j["exact_key"].get<std::string>() << '\n';
    }
    return kExitOk;
}

int cmd_construct(const std::string& family, int pad, const std::string& out_path) {
    GraphHandle h;
    require_ok(degent_graph_build(family.c_str(), pad, &h.g));
    char* text = nullptr;
    require_ok(degent_graph_emit(h.g, &text));
    std::string body = owned(text);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw CliError("cannot write " + out_path);
        out << body;
    }
    return kExitOk;
}

int cmd_min_entropy(int n, long m, bool bipartite, bool as_json, const std::string& emit_dir) {
    char* out = nullptr;
    require_ok(degent_min_entropy(n, m, bipartite ? 1 : 0, &out));
    json j = json::parse(owned(out));
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        int idx = 0;
        for (const auto& g : j["graphs"]) {
            std::ostringstream name;
            name << emit_dir << "/min_n" << n << "_m" << m << (bipartite ? "_bipartite" : "")
                 << "_" << idx++ << ".edges";
            std::ofstream f(name.str(), std::ios::binary);
            f << g["edge_list"].get<std::string>();
        }
    }
    if (as_json) {
        print_json(j);
        return kExitOk;
    }
    std::cout << "bound     = " << fmt9(j["bound"].get<double>()) << '\n'
              << "exact_key = " << j["exact_key_at_bound"].get<std::string>() << '\n'
              << "attained  = " << (j["attained"].get<bool>() ? "yes" : "no") << '\n';
    for (const auto& g : j["graphs"]) {
        std::cout << "extremal degree sequence:";
        for (const auto& d : g["degree_sequence"]) std::cout << ' ' << d.get<int>();
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_recognize(const std::string& kind, const std::string& file) {
    GraphHandle h = parse_graph_file(file);
    char* out = nullptr;
    require_ok(degent_recognize(h.g, kind.c_str(), &out));
    print_json(json::parse(owned(out)));
    return kExitOk;
}

int cmd_verify(const std::string& theorem, int max_n, const std::string& mode, int threads,
               const std::string& json_path) {
    char* out = nullptr;
    long failures = 0;
    require_ok(degent_verify(theorem.c_str(), max_n, mode.c_str(), threads, &out, &failures));
    json j = json::parse(owned(out));
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw CliError("cannot write " + json_path);
        f << j.dump(2) << '\n';
    }
    std::cout << j["scope"].get<std::string>() << ": checked " << j["checked_count"].get<long>()
              << ", failures " << failures << '\n';
    for (const auto& f : j["failures"])
        std::cout << "  FAIL " << f["instance"].get<std::string>() << ": expected "
                  << f["expected"].get<std::string>() << ", observed "
                  << f["observed"].get<std::string>() << '\n';
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_table1(bool as_csv, bool as_json) {
    char* out = nullptr;
    require_ok(degent_table1(6, &out));
    json j = json::parse(owned(out));
    if (as_json) {
        print_json(j);
        return kExitOk;
    }
    // cells keyed for lookup
    std::map<std::pair<int, long>, json> cells;
    long max_m = 0;
    for (const auto& c : j["cells"]) {
        cells[{c["n"].get<int>(), c["m"].get<long>()}] = c;
        max_m = std::max(max_m, c["m"].get<long>());
    }
    auto cell_text = [&](int n, long m) -> std::string {
        auto it = cells.find({n, m});
        if (it == cells.end()) return "";
        std::string s;
        for (const auto& name : it->second["minimizers"]) {
            if (!s.empty()) s += " and ";
            s += name.get<std::string>();
        }
        return s;
    };
    if (as_csv) {
        std::cout << "m/n,2,3,4,5,6\n";
        for (long m = 1; m <= max_m; ++m) {
            std::cout << m;
            for (int n = 2; n <= 6; ++n) std::cout << ',' << csv_cell(cell_text(n, m));
            std::cout << '\n';
        }
    } else {
        for (long m = 1; m <= max_m; ++m)
            for (int n = 2; n <= 6; ++n) {
                auto it = cells.find({n, m});
                if (it == cells.end()) continue;
                std::cout << "n=" << n << " m=" << m << ": " << cell_text(n, m)
                          << "  (i_d = " << fmt9(it->second["min_i_d"].get<double>()) << ")\n";
            }
    }
    return kExitOk;
}

int cmd_explore_b(int n, long m, bool as_csv, bool as_json) {
    char* out = nullptr;
    require_ok(degent_explore_b(n, m, &out));
    json j = json::parse(owned(out));
    if (as_json) {
        print_json(j);
        return kExitOk;
    }
    if (as_csv) {
        std::cout << "b,i_d,exact_key\n";
        for (const auto& row : j["rows"])
            std::cout << row["b"].get<int>() << ',' << fmt9(row["entropy"]["i_d"].get<double>())
                      << ',' << row["entropy"]["exact_key"].get<std::string>() << '\n';
        return kExitOk;
    }
    std::cout << "B(" << n << "," << m << ",b) entropies:\n";
    for (const auto& row : j["rows"])
        std::cout << "  b=" << row["b"].get<int>()
                  << "  i_d=" << fmt9(row["entropy"]["i_d"].get<double>())
                  << "  key=" << row["entropy"]["exact_key"].get<std::string>() << '\n';
    std::cout << "argmin b:";
    for (const auto& b : j["argmin_b"]) std::cout << ' ' << b.get<int>();
    std::cout << '\n';
    if (j.contains("family_attains_oracle_minimum"))
        std::cout << "family attains exhaustive bipartite minimum: "
                  << (j["family_attains_oracle_minimum"].get<bool>() ? "yes" : "no") << '\n';
    if (j.contains("note")) std::cout << "note: " << j["note"].get<std::string>() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-based graph entropy: exact computation, extremal "
                 "constructions, recognition, and exhaustive verification"};
    app.require_subcommand(1);

    std::string file, family, out_path, kind, theorem, json_path;
    std::string mode = "graphs";
    int n = 0, pad = 0, max_n = 6, threads = 0;
    long m = 0;
    bool as_json = false, as_csv = false, bipartite = false;
    std::string emit_dir;

    auto* entropy = app.add_subcommand("entropy", "Entropy report for an edge-list file");
    entropy->add_option("file", file)->required();
    entropy->add_flag("--json", as_json);

    auto* construct = app.add_subcommand("construct", "Emit a named graph as an edge list");
    construct->add_option("family", family,
                          "complete:K | complete_bipartite:S,T | star:N | empty:N | kkt:K,T | b:N,M,B")
        ->required();
    construct->add_option("--pad", pad, "isolated vertices to append");
    construct->add_option("-o,--output", out_path);

    auto* mine = app.add_subcommand("min-entropy", "Closed-form minimum and extremal graphs");
    mine->add_option("--n", n)->required();
    mine->add_option("--m", m)->required();
    mine->add_flag("--bipartite", bipartite);
    mine->add_flag("--json", as_json);
    mine->add_option("--emit-dir", emit_dir, "write one edge-list file per extremal graph");

    auto* rec = app.add_subcommand("recognize", "Threshold / difference membership");
    rec->add_option("--kind", kind)->required()->check(CLI::IsMember({"threshold", "difference"}));
    rec->add_option("file", file)->required();

    auto* ver = app.add_subcommand("verify", "Exhaustive theorem checks");
    ver->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"1", "2", "le1", "le7", "le8", "cor2"}));
    ver->add_option("--max-n", max_n);
    ver->add_option("--mode", mode)->check(CLI::IsMember({"sequences", "graphs"}));
    ver->add_option("--json", json_path, "write the full report to this file");
    ver->add_option("--threads", threads, "worker cap (default: machine parallelism)");

    auto* tab = app.add_subcommand("table1", "Minimum-entropy bipartite table, n = 2..6");
    tab->add_flag("--csv", as_csv);
    tab->add_flag("--json", as_json);

    auto* exp = app.add_subcommand("explore-b", "Entropy of B(n,m,b) across b");
    exp->add_option("--n", n)->required();
    exp->add_option("--m", m)->required();
    exp->add_flag("--csv", as_csv);
    exp->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (entropy->parsed()) return cmd_entropy(file, as_json);
        if (construct->parsed()) return cmd_construct(family, pad, out_path);
        if (mine->parsed()) return cmd_min_entropy(n, m, bipartite, as_json, emit_dir);
        if (rec->parsed()) return cmd_recognize(kind, file);
        if (ver->parsed()) return cmd_verify(theorem, max_n, mode, threads, json_path);
        if (tab->parsed()) return cmd_table1(as_csv, as_json);
        if (exp->parsed()) return cmd_explore_b(n, m, as_csv, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
