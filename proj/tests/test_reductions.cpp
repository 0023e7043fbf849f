#include <catch2/catch_amalgamated.hpp>

#include "rigidbound/henneberg.hpp"
#include "rigidbound/reductions.hpp"

using namespace rigidbound;

TEST_CASE("h1 bound doubles per added vertex") {
    CHECK(h1_bound(3) == 2);
    CHECK(h1_bound(4) == 4);
    CHECK(h1_bound(8) == 64);
    CHECK_THROWS_AS(h1_bound(2), std::invalid_argument);
}

TEST_CASE("degree-2 bound") {
    const MaxEmbeddingTable table;
    CHECK(!degree2_bound(Graph::triangle(), table).has_value());  // n-1=2 not tabulated

    // any 7-vertex Laman graph extended by one H1 step has a degree-2 vertex
    Catalog cat7 = enumerate_laman(7);
    Graph g = cat7.entries[0].graph;
    auto succ = henneberg_successors(g);
    REQUIRE(succ[0].min_degree() == 2);
    auto bound = degree2_bound(succ[0], table);
    REQUIRE(bound.has_value());
    CHECK(*bound == 112);
}

TEST_CASE("gluing witness on two triangles with a bridge") {
    // triangles {0,1,2} and {2,3,4} share vertex 2; bridge 1-3
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    g.add_edge(1, 3);
    REQUIRE(is_laman(g));

    auto w = find_gluing(g);
    REQUIRE(w.has_value());
    CHECK(w->side_a.size() == 3);
    CHECK(w->side_b.size() == 3);
    CHECK(w->shared == 2);

    const MaxEmbeddingTable table;
    auto bound = gluing_bound(*w, table);
    REQUIRE(bound.has_value());
    CHECK(*bound == 8);  // 2 * 2 * 2, consistent with the n=5 maximum

    // both sides are Laman and the bridge is the only crossing edge
    CHECK(is_laman(g.induced_subgraph(w->side_a)));
    CHECK(is_laman(g.induced_subgraph(w->side_b)));
}

TEST_CASE("no gluing on the triangle") {
    CHECK(!find_gluing(Graph::triangle()).has_value());
}

TEST_CASE("gluing bound is symmetric in the sides") {
    const MaxEmbeddingTable table;
    GluingWitness w;
    w.side_a = {0, 1, 2, 3};
    w.side_b = {3, 4, 5, 6, 7};
    CHECK(gluing_bound(w, table) == 64);  // 4 * 8 * 2
    std::swap(w.side_a, w.side_b);
    CHECK(gluing_bound(w, table) == 64);

    GluingWitness small;
    small.side_a = {0, 1, 2};
    small.side_b = {2, 3, 4};
    CHECK(gluing_bound(small, table) == 8);

    GluingWitness oversized;
    oversized.side_a = {0, 1, 2, 3, 4, 5, 6, 7};
    oversized.side_b = {7, 8};
    CHECK(!gluing_bound(oversized, table).has_value());
}

TEST_CASE("explicit 8-vertex gluing graph gets a witness with sides 4 and 5") {
    // K4 minus {0,1} on {0,1,2,3}; K4 minus {0,4} on {0,4,5,6} plus vertex 7
    // joined to 0 and 4; bridge 1-7. Shared vertex 0; min degree 3.
    Graph g(8);
    for (auto [u, v] : {std::pair<int, int>{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}, {0, 7}, {4, 7},
                        {1, 7}}) g.add_edge(u, v);
    REQUIRE(g.edge_count() == 13);
    REQUIRE(is_laman(g));
    REQUIRE(g.min_degree() == 3);

    auto w = find_gluing(g);
    REQUIRE(w.has_value());
    std::vector<size_t> sizes{w->side_a.size(), w->side_b.size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{4, 5});
    const MaxEmbeddingTable table;
    CHECK(gluing_bound(*w, table) == 64);
}
