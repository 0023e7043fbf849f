#ifndef RIGIDBOUND_GRAPH_HPP
#define RIGIDBOUND_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigidbound {

inline constexpr int kMaxVertices = 16;

// Simple undirected graph on at most 16 vertices. Adjacency rows are
// 16-bit masks so edge queries and neighborhood scans are single-word
// operations. Immutable in spirit: builders mutate, algorithms copy.
class Graph {
public:
    Graph() : n_(0), adj_{} {}

    explicit Graph(int n) : n_(n), adj_{} {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
    }

    static Graph triangle() {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    uint32_t vertex_mask() const { return (n_ == 0) ? 0u : ((1u << n_) - 1u); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[u] |= uint16_t(1u << v);
        adj_[v] |= uint16_t(1u << u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= uint16_t(~(1u << v));
        adj_[v] &= uint16_t(~(1u << u));
    }

    // Neighborhood of v as a bitmask.
    uint16_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return std::popcount(uint32_t(neighbors(v))); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(uint32_t(adj_[v]));
        return twice / 2;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> ds(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) ds[size_t(v)] = degree(v);
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int m = kMaxVertices * 2;
        for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
        return m;
    }

    // Edges as (u,v) with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u) {
            uint16_t row = uint16_t(adj_[u] >> (u + 1));
            int v = u + 1;
            while (row) {
                int shift = std::countr_zero(uint32_t(row));
                v += shift;
                es.emplace_back(u, v);
                row = uint16_t(row >> (shift + 1));
                ++v;
            }
        }
        return es;
    }

    // perm[old] = new. Edge {u,v} in g iff {perm[u],perm[v]} in result.
    Graph relabel(const std::vector<int>& perm) const {
        if (int(perm.size()) != n_)
            throw std::invalid_argument("relabel: permutation size mismatch");
        uint32_t seen = 0;
        for (int p : perm) {
            if (p < 0 || p >= n_ || ((seen >> p) & 1u))
                throw std::invalid_argument("relabel: not a bijection on 0..n-1");
            seen |= 1u << p;
        }
        Graph h(n_);
        for (auto [u, v] : edges()) h.add_edge(perm[size_t(u)], perm[size_t(v)]);
        return h;
    }

    // Vertices of `mask` reindexed 0..|S|-1 in ascending original order.
    Graph induced_subgraph(uint32_t mask) const {
        if (mask == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
        if (mask & ~vertex_mask())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        std::array<int, kMaxVertices> newidx{};
        int k = 0;
        for (int v = 0; v < n_; ++v)
            if ((mask >> v) & 1u) newidx[size_t(v)] = k++;
        Graph h(k);
        for (int u = 0; u < n_; ++u) {
            if (!((mask >> u) & 1u)) continue;
            uint16_t row = uint16_t(adj_[u] & mask);
            for (int v = u + 1; v < n_; ++v)
                if ((row >> v) & 1u) h.add_edge(newidx[size_t(u)], newidx[size_t(v)]);
        }
        return h;
    }

    Graph induced_subgraph(const std::vector<int>& vertices) const {
        uint32_t mask = 0;
        for (int v : vertices) {
            check_vertex(v);
            mask |= 1u << v;
        }
        if (std::popcount(mask) != int(vertices.size()))
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        return induced_subgraph(mask);
    }

    bool connected_within(uint32_t mask) const {
        mask &= vertex_mask();
        if (mask == 0) return true;
        uint32_t start = mask & (~mask + 1);
        uint32_t reached = start;
        uint32_t frontier = start;
        while (frontier) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= uint32_t(adj_[v]) & mask & ~reached;
            }
            reached |= next;
            frontier = next;
        }
        return reached == mask;
    }

    bool is_connected() const { return connected_within(vertex_mask()); }

    // True iff no vertex cut of size < k disconnects the graph; a complete
    // graph counts as (n-1)-connected.
    bool is_k_connected(int k) const {
        if (k < 1 || k > n_ - 1)
            throw std::invalid_argument("is_k_connected: k out of range");
        if (edge_count() == n_ * (n_ - 1) / 2) return true;
        for (int cut = 0; cut < k; ++cut) {
            // all vertex subsets of size `cut`
            std::vector<int> pick(static_cast<size_t>(cut));
            if (!survives_all_cuts(pick, 0, 0)) return false;
        }
        return true;
    }

    bool operator==(const Graph& other) const = default;

private:
    bool survives_all_cuts(std::vector<int>& pick, size_t depth, int from) const {
        if (depth == pick.size()) {
            uint32_t removed = 0;
            for (int v : pick) removed |= 1u << v;
            return connected_within(vertex_mask() & ~removed);
        }
        for (int v = from; v < n_; ++v) {
            pick[depth] = v;
            if (!survives_all_cuts(pick, depth + 1, v + 1)) return false;
        }
        return true;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_;
    std::array<uint16_t, kMaxVertices> adj_;
};

}  // namespace rigidbound

#endif
