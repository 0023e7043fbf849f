#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rigidbound/mixed_volume.hpp"
#include "rigidbound/polarization.hpp"

using namespace rigidbound;

namespace {

Support dilated_simplex_2d(int d) {
    Support s;
    s.dim = 2;
    s.points = {{0, 0}, {d, 0}, {0, d}};
    return s;
}

Support unit_simplex(int m) {
    Support s;
    s.dim = m;
    s.points.push_back(LatticePoint(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
        LatticePoint p(static_cast<size_t>(m), 0);
        p[size_t(i)] = 1;
        s.points.push_back(p);
    }
    return s;
}

Support random_support(std::mt19937_64& rng, int m, int max_coord, int npts) {
    Support s;
    s.dim = m;
    while (int(s.points.size()) < npts) {
        LatticePoint p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) p[size_t(i)] = int(rng() % uint64_t(max_coord + 1));
        s.points.push_back(p);
        s.normalize();
    }
    return s;
}

}  // namespace

TEST_CASE("two dilated simplices give the Bezout number") {
    std::vector<Support> sys{dilated_simplex_2d(2), dilated_simplex_2d(3)};
    CHECK(mixed_volume(sys) == 6);
    CHECK(mixed_volume_oracle(sys) == 6);
}

TEST_CASE("unit simplices have normalized mixed volume one") {
    for (int m : {1, 2, 3, 4, 6}) {
        std::vector<Support> sys(static_cast<size_t>(m), unit_simplex(m));
        CHECK(mixed_volume(sys) == 1);
        if (m <= 4) CHECK(mixed_volume_oracle(sys) == 1);
    }
}

TEST_CASE("axis segments span the unit cube") {
    std::vector<Support> sys;
    for (int i = 0; i < 2; ++i) {
        Support s;
        s.dim = 2;
        LatticePoint e(2, 0);
        s.points.push_back(e);
        e[size_t(i)] = 1;
        s.points.push_back(e);
        sys.push_back(s);
    }
    CHECK(mixed_volume(sys) == 1);
    CHECK(mixed_volume_oracle(sys) == 1);
}

TEST_CASE("one-dimensional support gives its degree") {
    Support s;
    s.dim = 1;
    s.points = {{0}, {1}, {2}};
    std::vector<Support> sys{s};
    CHECK(mixed_volume(sys) == 2);
    CHECK(mixed_volume_oracle(sys) == 2);
}

TEST_CASE("coincident support reports degenerate zero") {
    Support s;
    s.dim = 2;
    s.points = {{1, 1}};
    std::vector<Support> sys{s, dilated_simplex_2d(1)};
    MixedVolumeResult r = mixed_volume_full(sys, 7);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 0);
    CHECK(r.degenerate_input);
}

TEST_CASE("dimension mismatch is rejected") {
    Support s1;
    s1.dim = 1;
    s1.points = {{0}, {1}};
    std::vector<Support> sys{s1, dilated_simplex_2d(1)};
    CHECK_THROWS_AS(mixed_volume(sys), std::invalid_argument);
}

TEST_CASE("lifting computation agrees with the polarization oracle") {
    std::mt19937_64 rng(98765);
    int done = 0;
    while (done < 120) {
        int m = 2 + int(rng() % 2);  // 2 or 3
        std::vector<Support> sys;
        for (int i = 0; i < m; ++i)
            sys.push_back(random_support(rng, m, 2, 2 + int(rng() % 4)));
        BigInt lift = mixed_volume(sys, 1000 + uint64_t(done));
        BigInt oracle = mixed_volume_oracle(sys);
        REQUIRE(lift == oracle);
        ++done;
    }
}

TEST_CASE("mixed volume is invariant under support permutation and translation") {
    std::mt19937_64 rng(1212);
    for (int iter = 0; iter < 100; ++iter) {
        int m = 2 + int(rng() % 2);
        std::vector<Support> sys;
        for (int i = 0; i < m; ++i)
            sys.push_back(random_support(rng, m, 2, 2 + int(rng() % 4)));
        BigInt base = mixed_volume(sys, 42);

        std::vector<Support> perm = sys;
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(mixed_volume(perm, 43) == base);

        std::vector<Support> shifted = sys;
        size_t which = rng() % shifted.size();
        int axis = int(rng() % uint64_t(m));
        for (auto& p : shifted[which].points) p[size_t(axis)] += 3;
        REQUIRE(mixed_volume(shifted, 44) == base);
    }
}

TEST_CASE("enlarging a support never decreases the mixed volume") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        int m = 2 + int(rng() % 2);
        std::vector<Support> sys;
        for (int i = 0; i < m; ++i)
            sys.push_back(random_support(rng, m, 2, 2 + int(rng() % 3)));
        BigInt base = mixed_volume(sys, 7);
        std::vector<Support> bigger = sys;
        size_t which = rng() % bigger.size();
        LatticePoint extra(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) extra[size_t(i)] = int(rng() % 4);
        bigger[which].points.push_back(extra);
        bigger[which].normalize();
        REQUIRE(mixed_volume(bigger, 8) >= base);
    }
}

TEST_CASE("independent seeds give identical values") {
    std::mt19937_64 rng(31415);
    for (int iter = 0; iter < 25; ++iter) {
        int m = 2 + int(rng() % 2);
        std::vector<Support> sys;
        for (int i = 0; i < m; ++i)
            sys.push_back(random_support(rng, m, 2, 3 + int(rng() % 3)));
        CHECK(mixed_volume(sys, 1) == mixed_volume(sys, 999));
    }
}

TEST_CASE("abort threshold reports only an exceedance") {
    std::vector<Support> sys{dilated_simplex_2d(2), dilated_simplex_2d(3)};
    MixedVolumeOptions opts;
    opts.abort_above = BigInt(3);
    MixedVolumeResult r = mixed_volume_full(sys, 5, opts);
    CHECK(!r.value.has_value());  // 6 > 3

    opts.abort_above = BigInt(6);
    r = mixed_volume_full(sys, 5, opts);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 6);
}
