#include <doctest.h>

#include <json.hpp>

#include <string>

#include "degent.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    degent_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse, entropy, emit round trip") {
    degent_graph* g = nullptr;
    REQUIRE(degent_graph_parse("4 4\n1 2\n2 3\n3 4\n4 1", &g) == DEGENT_OK);
    char* out = nullptr;
    REQUIRE(degent_graph_entropy(g, &out) == DEGENT_OK);
    json j = json::parse(take(out));
    CHECK(j["i_d"].get<double>() == doctest::Approx(2.0));
    CHECK(j["exact_key"].get<std::string>() == "256");

    REQUIRE(degent_graph_emit(g, &out) == DEGENT_OK);
    CHECK(take(out) == "4 4\n1 2\n1 4\n2 3\n3 4\n");
    degent_graph_free(g);
}

TEST_CASE("parse errors carry messages") {
    degent_graph* g = nullptr;
    CHECK(degent_graph_parse("3 1\n1 1", &g) == DEGENT_ERR_PARSE);
    CHECK(std::string(degent_last_error()).find("self-loop") != std::string::npos);
    CHECK(degent_graph_parse(nullptr, &g) == DEGENT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("build families and operate") {
    degent_graph* a = nullptr;
    REQUIRE(degent_graph_build("kkt:4,1", 2, &a) == DEGENT_OK);
    char* out = nullptr;
    REQUIRE(degent_graph_entropy(a, &out) == DEGENT_OK);
    CHECK(json::parse(take(out))["two_m"].get<long>() == 14);

    degent_graph* b = nullptr;
    REQUIRE(degent_graph_build("complete:3", 0, &b) == DEGENT_OK);
    degent_graph* u = nullptr;
    REQUIRE(degent_graph_union(a, b, &u) == DEGENT_OK);
    degent_graph* c = nullptr;
    REQUIRE(degent_graph_complement(b, &c) == DEGENT_OK);
    REQUIRE(degent_graph_entropy(c, &out) == DEGENT_ERR_INVALID_ARGUMENT);  // m = 0

    CHECK(degent_graph_build("nosuch:1", 0, &b) == DEGENT_ERR_INVALID_ARGUMENT);

    degent_graph_free(a);
    degent_graph_free(b);
    degent_graph_free(u);
    degent_graph_free(c);
}

TEST_CASE("recognize") {
    degent_graph* g = nullptr;
    REQUIRE(degent_graph_parse("4 3\n1 2\n2 3\n3 4", &g) == DEGENT_OK);
    char* out = nullptr;
    REQUIRE(degent_recognize(g, "threshold", &out) == DEGENT_OK);
    json j = json::parse(take(out));
    CHECK_FALSE(j["verdict"].get<bool>());
    CHECK(j.contains("witness"));
    CHECK(degent_recognize(g, "bogus", &out) == DEGENT_ERR_INVALID_ARGUMENT);
    degent_graph_free(g);
}

TEST_CASE("min entropy surface") {
    char* out = nullptr;
    REQUIRE(degent_min_entropy(5, 4, 1, &out) == DEGENT_OK);
    json j = json::parse(take(out));
    CHECK(j["bound"].get<double>() == doctest::Approx(2.0));
    CHECK(j["graphs"].size() == 2);
    CHECK(degent_min_entropy(4, 99, 0, &out) == DEGENT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify surface and failure counter") {
    char* out = nullptr;
    long failures = -1;
    REQUIRE(degent_verify("2", 4, nullptr, 1, &out, &failures) == DEGENT_OK);
    json j = json::parse(take(out));
    CHECK(failures == 0);
    CHECK(j["failures"].empty());
    CHECK(j["checked_count"].get<long>() > 0);
    CHECK(degent_verify("zzz", 4, nullptr, 1, &out, &failures) ==
          DEGENT_ERR_INVALID_ARGUMENT);
    CHECK(degent_verify("1", 4, "typo", 1, &out, &failures) == DEGENT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("json output is byte-identical across runs") {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(degent_explore_b(7, 7, &a) == DEGENT_OK);
    REQUIRE(degent_explore_b(7, 7, &b) == DEGENT_OK);
    CHECK(take(a) == take(b));

    REQUIRE(degent_verify("1", 5, nullptr, 4, &a, nullptr) == DEGENT_OK);
    REQUIRE(degent_verify("1", 5, nullptr, 1, &b, nullptr) == DEGENT_OK);
    CHECK(take(a) == take(b));  // thread count must not change the report
}

TEST_CASE("table1 surface") {
    char* out = nullptr;
    REQUIRE(degent_table1(4, &out) == DEGENT_OK);
    json j = json::parse(take(out));
    bool found = false;
    for (const auto& c : j["cells"])
        if (c["n"] == 4 && c["m"] == 4) {
            found = true;
            CHECK(c["minimizers"] == json::array({"K_{2,2}"}));
        }
    CHECK(found);
}
