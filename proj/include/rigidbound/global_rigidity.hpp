#ifndef RIGIDBOUND_GLOBAL_RIGIDITY_HPP
#define RIGIDBOUND_GLOBAL_RIGIDITY_HPP

#include <vector>

#include "rigidbound/cayley_menger.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/pebble.hpp"

namespace rigidbound {

// Generic global rigidity in the plane: complete graphs on <= 3 vertices,
// else 3-connected and redundantly rigid.
inline bool generically_globally_rigid(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 3) return g.edge_count() == n * (n - 1) / 2;
    if (!g.is_k_connected(3)) return false;
    int target = 2 * n - 3;
    if (pebble_rank(g) != target) return false;
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (pebble_rank(h) != target) return false;
    }
    return true;
}

// Does fixing the unknown distances in S pin the whole configuration?
// Operationalized as generic global rigidity of G plus the edges of S.
inline bool uniquely_determining(const Graph& g, const DistanceAssignment& da,
                                 const std::vector<int>& s_vars) {
    Graph h = g;
    for (int var : s_vars) {
        auto [u, v] = da.unknown_pairs[size_t(var)];
        h.add_edge(u, v);
    }
    return generically_globally_rigid(h);
}

}  // namespace rigidbound

#endif
