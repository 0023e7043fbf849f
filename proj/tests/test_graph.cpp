#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rigidbound/canonical.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/graph6.hpp"
#include "test_util.hpp"

using namespace rigidbound;

TEST_CASE("triangle relabelings share one canonical code") {
    Graph t = Graph::triangle();
    CanonicalCode base = canonical_form(t);
    CHECK(canonical_form(t.relabel({2, 0, 1})) == base);
    CHECK(canonical_form(t.relabel({1, 2, 0})) == base);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(canonical_form(path) != base);
}

TEST_CASE("relabel basics") {
    Graph t = Graph::triangle();
    CHECK(t.relabel({0, 1, 2}) == t);

    Graph r = t.relabel({2, 0, 1});
    CHECK(r.edge_count() == 3);
    CHECK(r.degree_sequence() == std::vector<int>{2, 2, 2});

    CHECK_THROWS_AS(t.relabel({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(t.relabel({0, 1}), std::invalid_argument);
}

TEST_CASE("relabel then canonical_form is invariant over random pairs") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 3 + int(rng() % 6);
        Graph g = rbtest::random_graph(rng, n);
        auto perm = rbtest::random_permutation(rng, n);
        Graph h = g.relabel(perm);
        // direct edge-set oracle for relabel
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                REQUIRE(g.has_edge(u, v) == h.has_edge(perm[size_t(u)], perm[size_t(v)]));
        REQUIRE(canonical_form(h) == canonical_form(g));
    }
}

TEST_CASE("canonical code equality matches brute-force isomorphism") {
    std::mt19937_64 rng(7);
    int agreements = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int n = 3 + int(rng() % 5);  // up to 7
        Graph a = rbtest::random_graph(rng, n);
        Graph b;
        if (iter % 2 == 0) {
            b = a.relabel(rbtest::random_permutation(rng, n));
        } else {
            b = rbtest::random_graph(rng, n);
        }
        bool iso = rbtest::brute_force_isomorphic(a, b);
        bool same = canonical_form(a) == canonical_form(b);
        REQUIRE(iso == same);
        ++agreements;
    }
    CHECK(agreements == 200);
}

TEST_CASE("induced subgraphs") {
    Graph t = Graph::triangle();
    CHECK(canonical_form(t.induced_subgraph(0b111u)) == canonical_form(t));

    Graph e = t.induced_subgraph(std::vector<int>{0, 2});
    CHECK(e.vertex_count() == 2);
    CHECK(e.edge_count() == 1);

    Graph k4 = Graph::complete(4);
    for (uint32_t mask : {0b0111u, 0b1011u, 0b1101u, 0b1110u})
        CHECK(canonical_form(k4.induced_subgraph(mask)) == canonical_form(t));

    CHECK_THROWS_AS(t.induced_subgraph(0u), std::invalid_argument);
}

TEST_CASE("induced subgraph composes") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 5 + int(rng() % 4);
        Graph g = rbtest::random_graph(rng, n);
        uint32_t s = uint32_t(rng()) & g.vertex_mask();
        if (std::popcount(s) < 2) continue;
        Graph gs = g.induced_subgraph(s);
        uint32_t t = uint32_t(rng()) & gs.vertex_mask();
        if (std::popcount(t) < 1) continue;
        // map t back to original vertex ids
        std::vector<int> orig;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) orig.push_back(v);
        uint32_t t_orig = 0;
        for (int i = 0; i < gs.vertex_count(); ++i)
            if ((t >> i) & 1u) t_orig |= 1u << orig[size_t(i)];
        REQUIRE(gs.induced_subgraph(t) == g.induced_subgraph(t_orig));
    }
}

TEST_CASE("degree and connectivity queries") {
    Graph t = Graph::triangle();
    CHECK(t.degree_sequence() == std::vector<int>{2, 2, 2});
    CHECK(t.is_k_connected(2));

    Graph k4e = Graph::complete(4);
    k4e.remove_edge(0, 1);
    CHECK(k4e.degree_sequence() == std::vector<int>{2, 2, 3, 3});

    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(star.min_degree() == 1);
    CHECK(!star.is_k_connected(2));

    CHECK(Graph::complete(5).is_k_connected(4));
    CHECK_THROWS_AS(t.is_k_connected(0), std::invalid_argument);
}

TEST_CASE("graph6 round trip and known strings") {
    CHECK(graph6_encode(Graph::triangle()) == "Bw");
    CHECK(graph6_encode(Graph::complete(4)) == "C~");
    CHECK(graph6_decode("Bw") == Graph::triangle());

    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + int(rng() % 15);
        Graph g = rbtest::random_graph(rng, n);
        REQUIRE(graph6_decode(graph6_encode(g)) == g);
    }

    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);
}
