#ifndef RIGIDBOUND_REDUCTIONS_HPP
#define RIGIDBOUND_REDUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rigidbound/graph.hpp"
#include "rigidbound/pebble.hpp"

namespace rigidbound {

// Known tight maximum embedding counts for Laman graphs on 3..7
// vertices. Frozen reference values consumed by the cheap bounds; this
// library never recomputes them.
struct MaxEmbeddingTable {
    std::map<int, int64_t> max_emb{{3, 2}, {4, 4}, {5, 8}, {6, 24}, {7, 56}};

    std::optional<int64_t> lookup(int n) const {
        auto it = max_emb.find(n);
        if (it == max_emb.end()) return std::nullopt;
        return it->second;
    }
};

// A graph built from only degree-2 vertex additions doubles its embedding
// count with each step: 2^(n-2).
inline int64_t h1_bound(int n) {
    if (n < 3) throw std::invalid_argument("h1_bound: n >= 3 required");
    if (n > 40) throw std::invalid_argument("h1_bound: n out of supported range");
    return int64_t(1) << (n - 2);
}

// A degree-2 vertex moves on a circle intersection: at most twice the
// best count on n-1 vertices.
inline std::optional<int64_t> degree2_bound(const Graph& g, const MaxEmbeddingTable& table) {
    if (g.min_degree() != 2) return std::nullopt;
    auto smaller = table.lookup(g.vertex_count() - 1);
    if (!smaller) return std::nullopt;
    return 2 * *smaller;
}

// Decomposition of a Laman graph into two Laman subgraphs sharing one
// vertex, joined by exactly one extra edge.
struct GluingWitness {
    std::vector<int> side_a;        // ascending, includes the shared vertex
    std::vector<int> side_b;        // ascending, includes the shared vertex
    int shared = -1;
    std::pair<int, int> bridge{-1, -1};  // one endpoint per side, neither shared
};

inline std::optional<int64_t> gluing_bound(const GluingWitness& w, const MaxEmbeddingTable& table) {
    auto a = table.lookup(int(w.side_a.size()));
    auto b = table.lookup(int(w.side_b.size()));
    if (!a || !b) return std::nullopt;  // side size outside the table: rule inapplicable
    return *a * *b * 2;
}

namespace detail {

inline std::vector<int> mask_to_vertices(uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

}  // namespace detail

// Exhaustive search over single-shared-vertex bipartitions with exactly
// one crossing edge and both sides Laman. Returns the witness minimizing
// the gluing bound; ties resolved by lexicographically smallest side A.
inline std::optional<GluingWitness> find_gluing(const Graph& g) {
    int n = g.vertex_count();
    if (n < 5) return std::nullopt;  // two Laman sides need at least 3+3-1 vertices
    const MaxEmbeddingTable table;

    std::optional<GluingWitness> best;
    std::optional<int64_t> best_bound;

    for (int shared = 0; shared < n; ++shared) {
        uint32_t others = g.vertex_mask() & ~(1u << shared);
        int rest = n - 1;
        std::vector<int> other_list = detail::mask_to_vertices(others);
        int lowest = other_list[0];
        // orient each split by pinning the lowest non-shared vertex to side A
        for (uint32_t bits = 0; bits < (1u << (rest - 1)); ++bits) {
            uint32_t a_mask = (1u << shared) | (1u << lowest);
            uint32_t assigned = bits;
            for (int i = 1; i < rest; ++i)
                if ((assigned >> (i - 1)) & 1u) a_mask |= 1u << other_list[size_t(i)];
            uint32_t b_mask = (g.vertex_mask() & ~a_mask) | (1u << shared);
            int na = std::popcount(a_mask), nb = std::popcount(b_mask);
            if (na < 3 || nb < 3) continue;

            // exactly one edge between A\{shared} and B\{shared}
            uint32_t a_only = a_mask & ~(1u << shared);
            uint32_t b_only = b_mask & ~(1u << shared);
            int crossings = 0;
            std::pair<int, int> bridge{-1, -1};
            for (int u = 0; u < n && crossings <= 1; ++u) {
                if (!((a_only >> u) & 1u)) continue;
                uint32_t hits = uint32_t(g.neighbors(u)) & b_only;
                while (hits) {
                    int v = std::countr_zero(hits);
                    hits &= hits - 1;
                    ++crossings;
                    bridge = {u, v};
                    if (crossings > 1) break;
                }
            }
            if (crossings != 1) continue;
            if (!is_laman(g.induced_subgraph(a_mask))) continue;
            if (!is_laman(g.induced_subgraph(b_mask))) continue;

            GluingWitness w;
            w.side_a = detail::mask_to_vertices(a_mask);
            w.side_b = detail::mask_to_vertices(b_mask);
            w.shared = shared;
            w.bridge = bridge;
            if (w.side_b < w.side_a) {
                std::swap(w.side_a, w.side_b);
                std::swap(w.bridge.first, w.bridge.second);
            }
            auto bound = gluing_bound(w, table);
            bool better = false;
            if (!best) {
                better = true;
            } else if (bound && !best_bound) {
                better = true;
            } else if (bound.has_value() == best_bound.has_value()) {
                if (bound && *bound != *best_bound)
                    better = *bound < *best_bound;
                else
                    better = std::tie(w.side_a, w.side_b, w.bridge) <
                             std::tie(best->side_a, best->side_b, best->bridge);
            }
            if (better) {
                best = w;
                best_bound = bound;
            }
        }
    }
    return best;
}

}  // namespace rigidbound

#endif
