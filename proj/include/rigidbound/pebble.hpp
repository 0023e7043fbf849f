#ifndef RIGIDBOUND_PEBBLE_HPP
#define RIGIDBOUND_PEBBLE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "rigidbound/graph.hpp"

namespace rigidbound {

namespace detail {

// (2,3)-pebble game. Every vertex starts with two pebbles; an edge is
// accepted iff four pebbles can be gathered on its endpoints (the edge
// then consumes one). Accepted edges are oriented away from the vertex
// that paid the pebble; gathering reverses directed paths.
class PebbleGame {
public:
    explicit PebbleGame(int n) : n_(n), pebbles_{}, out_{} {
        for (int v = 0; v < n; ++v) pebbles_[size_t(v)] = 2;
    }

    bool try_insert(int u, int v) {
        while (pebbles_[size_t(u)] + pebbles_[size_t(v)] < 4) {
            // only gather onto an endpoint below the 2-pebble cap
            bool progressed = false;
            if (pebbles_[size_t(u)] < 2 && gather(u, u, v))
                progressed = true;
            else if (pebbles_[size_t(v)] < 2 && gather(v, u, v))
                progressed = true;
            if (!progressed) return false;
        }
        // 2 + 2 gathered; orient u -> v and pay one pebble from u
        pebbles_[size_t(u)] -= 1;
        out_[size_t(u)] |= uint16_t(1u << v);
        return true;
    }

private:
    // Depth-first search from `root` along oriented edges for a vertex
    // (other than the two endpoints) holding a pebble; reverses the path.
    bool gather(int root, int u, int v) {
        visited_ = (1u << u) | (1u << v);
        visited_ |= 1u << root;
        return dfs(root, u, v);
    }

    bool dfs(int w, int u, int v) {
        uint16_t row = out_[size_t(w)];
        for (int t = 0; t < n_; ++t) {
            if (!((row >> t) & 1u) || ((visited_ >> t) & 1u)) continue;
            visited_ |= 1u << t;
            if (pebbles_[size_t(t)] > 0) {
                pebbles_[size_t(t)] -= 1;
                pebbles_[size_t(w)] += 1;
                out_[size_t(w)] &= uint16_t(~(1u << t));
                out_[size_t(t)] |= uint16_t(1u << w);
                return true;
            }
            if (dfs(t, u, v)) {
                // t handed a pebble up; reverse the edge w -> t
                pebbles_[size_t(t)] -= 1;
                pebbles_[size_t(w)] += 1;
                out_[size_t(w)] &= uint16_t(~(1u << t));
                out_[size_t(t)] |= uint16_t(1u << w);
                return true;
            }
        }
        return false;
    }

    int n_;
    std::array<int, kMaxVertices> pebbles_;
    std::array<uint16_t, kMaxVertices> out_;
    uint32_t visited_ = 0;
};

}  // namespace detail

// Rank of the edge set in the planar rigidity matroid: the number of
// edges the (2,3)-pebble game accepts, processing edges in ascending
// lexicographic order.
inline int pebble_rank(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("pebble_rank: need at least 2 vertices");
    detail::PebbleGame game(g.vertex_count());
    int rank = 0;
    for (auto [u, v] : g.edges())
        if (game.try_insert(u, v)) ++rank;
    return rank;
}

// Laman test: |E| = 2n-3 and all edges independent in the pebble game.
inline bool is_laman(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("is_laman: need at least 3 vertices");
    if (g.edge_count() != 2 * n - 3) return false;
    return pebble_rank(g) == 2 * n - 3;
}

}  // namespace rigidbound

#endif
