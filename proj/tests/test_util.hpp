#ifndef RIGIDBOUND_TEST_UTIL_HPP
#define RIGIDBOUND_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rigidbound/graph.hpp"

namespace rbtest {

using rigidbound::Graph;

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Brute-force isomorphism over all n! bijections; n <= 8 only.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[size_t(u)], perm[size_t(v)])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Definition-level Laman check: edge count plus the sparsity condition on
// every induced subset with at least two vertices.
inline bool naive_is_laman(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() != 2 * n - 3) return false;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int k = std::popcount(mask);
        if (k < 2 || k >= n) continue;
        int edges = 0;
        for (int u = 0; u < n; ++u) {
            if (!((mask >> u) & 1u)) continue;
            for (int v = u + 1; v < n; ++v)
                if (((mask >> v) & 1u) && g.has_edge(u, v)) ++edges;
        }
        if (edges > 2 * k - 3) return false;
    }
    return true;
}

}  // namespace rbtest

#endif
