#include <doctest.h>

#include <algorithm>
#include <random>

#include "degent/graph.hpp"

using namespace degent;

TEST_CASE("parse smallest graph") {
    Graph g = parse_edge_list("2 1\n1 2");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("parse 4-cycle") {
    Graph g = parse_edge_list("4 4\n1 2\n2 3\n3 4\n4 1");
    CHECK(degree_sequence(g) == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("parse accepts comments and reports line numbers on errors") {
    Graph g = parse_edge_list("# a comment\n2 1\n# another\n1 2\n");
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 1"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n1 2\n1 2"), doctest::Contains("duplicate"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 4"), doctest::Contains("out of range"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2"), std::invalid_argument);  // m mismatch
    CHECK_THROWS_AS(parse_edge_list("nonsense"), std::invalid_argument);
}

TEST_CASE("named families") {
    CHECK(degree_sequence(make_complete(5)) == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(degree_sequence(make_clique_plus_pendant(4, 1)) == std::vector<int>{4, 3, 3, 3, 1});
    CHECK(degree_sequence(pad_isolated(make_complete_bipartite(2, 2), 1)) ==
          std::vector<int>{2, 2, 2, 2, 0});
    // t = 0 is the bare clique, no extra vertex
    CHECK(make_clique_plus_pendant(4, 0).vertex_count() == 4);
    CHECK(make_clique_plus_pendant(4, 1).vertex_count() == 5);
    CHECK_THROWS_AS(make_clique_plus_pendant(3, 4), std::invalid_argument);
}

TEST_CASE("union and complement") {
    CHECK(complement(make_complete(4)).edge_count() == 0);
    CHECK(isomorphic(complement(make_empty(3)), make_complete(3)));
    Graph two_k2 = graph_union(make_complete(2), make_complete(2));
    CHECK(degree_sequence(two_k2) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("degree sequence of padded graph appends zeros") {
    Graph g = make_clique_plus_pendant(4, 1);
    auto base = degree_sequence(g);
    auto padded = degree_sequence(pad_isolated(g, 3));
    base.insert(base.end(), {0, 0, 0});
    CHECK(padded == base);
}

TEST_CASE("handshake identity holds for constructed graphs") {
    for (const Graph& g : {make_complete(6), make_complete_bipartite(3, 4),
                           make_clique_plus_pendant(5, 3), make_star(7)}) {
        auto d = degree_sequence(g);
        long sum = 0;
        for (int v : d) sum += v;
        CHECK(sum == 2L * g.edge_count());
    }
}

TEST_CASE("canonical key separates and identifies small graphs") {
    Graph p4a = parse_edge_list("4 3\n1 2\n2 3\n3 4");
    Graph p4b = parse_edge_list("4 3\n2 4\n1 4\n1 3");  // relabeled path
    Graph c4 = parse_edge_list("4 4\n1 2\n2 3\n3 4\n4 1");
    CHECK(canonical_key(p4a) == canonical_key(p4b));
    CHECK(canonical_key(p4a) != canonical_key(c4));
    // same n and m, different degree sequences
    Graph star4 = make_star(4);
    Graph k3_pad = pad_isolated(make_complete(3), 1);
    CHECK(canonical_key(star4) != canonical_key(k3_pad));
}

TEST_CASE("canonical key is invariant under random relabelings") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);  // 4..7
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges())
            h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("bipartition") {
    auto c4 = bipartition(parse_edge_list("4 4\n1 2\n2 3\n3 4\n4 1"));
    REQUIRE(c4.has_value());
    CHECK((*c4)[0] != (*c4)[1]);
    CHECK((*c4)[0] == (*c4)[2]);

    CHECK_FALSE(bipartition(make_complete(3)).has_value());

    // K_{2,3} u Kbar_2: isolated vertices land on side X
    Graph g = pad_isolated(make_complete_bipartite(2, 3), 2);
    auto color = bipartition(g);
    REQUIRE(color.has_value());
    int x = 0, y = 0;
    for (int c : *color) (c == 0 ? x : y)++;
    CHECK(x == 4);
    CHECK(y == 3);
}

TEST_CASE("emit then parse is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("emission is bit-exact") {
    Graph g = parse_edge_list("# c\n4 3\n3 4\n1 3\n1 2\n");
    CHECK(emit_edge_list(g) == "4 3\n1 2\n1 3\n3 4\n");
}
