#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rigidbound/canonical.hpp"
#include "rigidbound/henneberg.hpp"
#include "test_util.hpp"

using namespace rigidbound;

TEST_CASE("successors of the triangle") {
    Graph t = Graph::triangle();
    auto all = henneberg_successors_with_steps(t);

    Graph k4e = Graph::complete(4);
    k4e.remove_edge(0, 1);
    CanonicalCode k4e_code = canonical_form(k4e);

    int h1 = 0;
    std::set<CanonicalCode> classes;
    for (auto& [g, step] : all) {
        classes.insert(canonical_form(g));
        if (step.kind == StepKind::H1) {
            ++h1;
            CHECK(canonical_form(g) == k4e_code);
        }
    }
    CHECK(h1 == 3);                    // C(3,2) labeled H1 successors
    CHECK(classes.size() == 1);        // H2 gives the same single class at n=4
}

TEST_CASE("successors of random Laman graphs stay Laman") {
    std::mt19937_64 rng(31337);
    std::vector<Graph> samples;
    for (int n = 3; n <= 6; ++n) {
        Catalog cat = enumerate_laman(n);
        for (const auto& e : cat.entries) samples.push_back(e.graph);
    }
    int checked = 0;
    while (checked < 100) {
        const Graph& g = samples[rng() % samples.size()];
        auto succ = henneberg_successors(g);
        for (const Graph& h : succ) REQUIRE(is_laman(h));
        ++checked;
    }
}

TEST_CASE("enumeration counts match the reference table through n=7") {
    struct Row {
        int n, h1, h2;
    };
    const Row rows[] = {{3, 1, 0}, {4, 1, 0}, {5, 3, 0}, {6, 11, 2}, {7, 61, 9}};
    for (const Row& row : rows) {
        Catalog cat = enumerate_laman(row.n, 2);
        CHECK(int(cat.entries.size()) == row.h1 + row.h2);
        CHECK(cat.count(LamanClass::H1) == row.h1);
        CHECK(cat.count(LamanClass::H2) == row.h2);
    }
}

TEST_CASE("n=6 catalog has exactly 13 distinct canonical codes") {
    Catalog cat = enumerate_laman(6);
    std::set<CanonicalCode> codes;
    for (const auto& e : cat.entries) codes.insert(canonical_form(e.graph));
    CHECK(codes.size() == 13);
}

TEST_CASE("traces replay to their catalog graphs") {
    for (int n = 3; n <= 7; ++n) {
        Catalog cat = enumerate_laman(n);
        for (const auto& e : cat.entries) {
            CHECK(int(e.trace.steps.size()) == n - 3);
            Graph g = replay(e.trace);
            REQUIRE(g == e.graph);
            REQUIRE(canonical_form(g) == e.code);
        }
    }
}

TEST_CASE("classification basics") {
    CHECK(classify(Graph::triangle()) == LamanClass::H1);
    CHECK_THROWS_AS(classify(Graph::complete(4)), std::invalid_argument);

    // triangular prism needs an H2 step
    Graph prism(6);
    prism.add_edge(0, 1);
    prism.add_edge(1, 2);
    prism.add_edge(2, 0);
    prism.add_edge(3, 4);
    prism.add_edge(4, 5);
    prism.add_edge(5, 3);
    prism.add_edge(0, 3);
    prism.add_edge(1, 4);
    prism.add_edge(2, 5);
    CHECK(is_laman(prism));
    CHECK(classify(prism) == LamanClass::H2);
}

TEST_CASE("parallel enumeration matches serial") {
    Catalog serial = enumerate_laman(6, 1);
    Catalog parallel = enumerate_laman(6, 4);
    REQUIRE(serial.entries.size() == parallel.entries.size());
    for (size_t i = 0; i < serial.entries.size(); ++i) {
        CHECK(serial.entries[i].code == parallel.entries[i].code);
        CHECK(serial.entries[i].graph == parallel.entries[i].graph);
    }
}
