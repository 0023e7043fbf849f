#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rigidbound/graph.hpp"
#include "rigidbound/henneberg.hpp"
#include "rigidbound/pebble.hpp"
#include "test_util.hpp"

using namespace rigidbound;

TEST_CASE("pebble rank on the basic shapes") {
    CHECK(pebble_rank(Graph::triangle()) == 3);
    CHECK(pebble_rank(Graph::complete(4)) == 5);

    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(pebble_rank(c4) == 4);
}

TEST_CASE("is_laman on the basic shapes") {
    CHECK(is_laman(Graph::triangle()));
    CHECK(!is_laman(Graph::complete(4)));

    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(!is_laman(c4));
}

TEST_CASE("pebble game agrees with the subset definition on catalogs") {
    for (int n = 3; n <= 6; ++n) {
        Catalog cat = enumerate_laman(n);
        for (const auto& entry : cat.entries) {
            REQUIRE(is_laman(entry.graph));
            REQUIRE(rbtest::naive_is_laman(entry.graph));
        }
    }
}

TEST_CASE("pebble game agrees with the subset definition on random graphs") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    int non_laman = 0;
    while (non_laman < 500) {
        int n = 3 + int(rng() % 5);
        Graph g = rbtest::random_graph(rng, n);
        bool naive = rbtest::naive_is_laman(g);
        REQUIRE(is_laman(g) == naive);
        if (!naive) ++non_laman;
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("removing any degree-2 vertex of a Laman graph keeps it Laman") {
    for (int n = 4; n <= 7; ++n) {
        Catalog cat = enumerate_laman(n);
        for (const auto& entry : cat.entries) {
            const Graph& g = entry.graph;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) != 2) continue;
                Graph h = g.induced_subgraph(g.vertex_mask() & ~(1u << v));
                REQUIRE(is_laman(h));
            }
        }
    }
}
