#ifndef RIGIDBOUND_HENNEBERG_HPP
#define RIGIDBOUND_HENNEBERG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidbound/canonical.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/parallel.hpp"
#include "rigidbound/pebble.hpp"

namespace rigidbound {

enum class StepKind : uint8_t { H1, H2 };

// One vertex-addition step. H1 joins the new vertex to two existing
// vertices; H2 joins it to three existing vertices spanning at least one
// edge and removes one such edge. The new vertex is always the next
// unused index, so the step only records attachment data.
struct HennebergStep {
    StepKind kind;
    std::array<int, 3> attach;      // attach[2] = -1 for H1
    std::pair<int, int> removed;    // H2 only; endpoints among attach

    static HennebergStep h1(int a, int b) { return {StepKind::H1, {a, b, -1}, {-1, -1}}; }
    static HennebergStep h2(int a, int b, int c, int ru, int rv) {
        return {StepKind::H2, {a, b, c}, {ru, rv}};
    }
};

struct HennebergTrace {
    std::vector<HennebergStep> steps;  // length n-3, starting from the triangle
};

enum class LamanClass : uint8_t { H1, H2 };

inline const char* to_string(LamanClass c) { return c == LamanClass::H1 ? "H1" : "H2"; }

// Replay a trace from the triangle; throws if a step is malformed.
inline Graph replay(const HennebergTrace& trace) {
    Graph g = Graph::triangle();
    for (const HennebergStep& step : trace.steps) {
        int n = g.vertex_count();
        if (n >= kMaxVertices) throw std::invalid_argument("replay: too many steps");
        Graph h(n + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        auto [a, b, c] = step.attach;
        if (step.kind == StepKind::H1) {
            if (a == b || a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("replay: bad H1 attachment");
            h.add_edge(n, a);
            h.add_edge(n, b);
        } else {
            if (a == b || a == c || b == c || a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
                throw std::invalid_argument("replay: bad H2 attachment");
            auto [ru, rv] = step.removed;
            bool inside = (ru == a || ru == b || ru == c) && (rv == a || rv == b || rv == c);
            if (!inside || !h.has_edge(ru, rv))
                throw std::invalid_argument("replay: H2 removed edge not inside attachment");
            h.add_edge(n, a);
            h.add_edge(n, b);
            h.add_edge(n, c);
            h.remove_edge(ru, rv);
        }
        g = h;
    }
    return g;
}

// All one-step extensions of a Laman graph, each paired with the step
// that produced it. H1 over every vertex pair first (ascending), then H2
// over every vertex triple containing an edge, times each removable edge.
inline std::vector<std::pair<Graph, HennebergStep>> henneberg_successors_with_steps(const Graph& g) {
    int n = g.vertex_count();
    if (n >= kMaxVertices) throw std::invalid_argument("henneberg_successors: graph full");
    std::vector<std::pair<Graph, HennebergStep>> out;
    Graph base(n + 1);
    for (auto [u, v] : g.edges()) base.add_edge(u, v);

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            Graph h = base;
            h.add_edge(n, a);
            h.add_edge(n, b);
            out.emplace_back(std::move(h), HennebergStep::h1(a, b));
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                std::array<std::pair<int, int>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
                for (auto [ru, rv] : pairs) {
                    if (!g.has_edge(ru, rv)) continue;
                    Graph h = base;
                    h.add_edge(n, a);
                    h.add_edge(n, b);
                    h.add_edge(n, c);
                    h.remove_edge(ru, rv);
                    out.emplace_back(std::move(h), HennebergStep::h2(a, b, c, ru, rv));
                }
            }
        }
    }
    return out;
}

inline std::vector<Graph> henneberg_successors(const Graph& g) {
    std::vector<Graph> out;
    for (auto& [h, step] : henneberg_successors_with_steps(g)) out.push_back(h);
    return out;
}

namespace detail {

// Backtracking over degree-2 removal orders; memoized on canonical codes.
inline bool reducible_to_triangle(const Graph& g,
                                  std::unordered_map<CanonicalCode, bool, CanonicalCode::Hash>& memo) {
    int n = g.vertex_count();
    if (n == 3) return true;
    CanonicalCode code = canonical_form(g);
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int v = 0; v < n && !ok; ++v) {
        if (g.degree(v) != 2) continue;
        Graph h = g.induced_subgraph(g.vertex_mask() & ~(1u << v));
        ok = reducible_to_triangle(h, memo);
    }
    memo[code] = ok;
    return ok;
}

}  // namespace detail

// H1 iff some sequence of degree-2 vertex removals reaches the triangle.
// The search backtracks over removal choices rather than removing
// greedily; order-independence of greedy removal is not assumed.
inline LamanClass classify(const Graph& g) {
    if (!is_laman(g)) throw std::invalid_argument("classify: graph is not Laman");
    std::unordered_map<CanonicalCode, bool, CanonicalCode::Hash> memo;
    return detail::reducible_to_triangle(g, memo) ? LamanClass::H1 : LamanClass::H2;
}

struct CatalogEntry {
    Graph graph;            // as generated; trace replays to exactly this labeling
    HennebergTrace trace;
    CanonicalCode code;
    LamanClass cls;
};

struct Catalog {
    int n = 0;
    std::vector<CatalogEntry> entries;  // sorted by canonical code

    int count(LamanClass c) const {
        int k = 0;
        for (const auto& e : entries) k += (e.cls == c) ? 1 : 0;
        return k;
    }
};

// Breadth-first Henneberg enumeration with canonical-code deduplication
// per level: exactly one representative per isomorphism class of Laman
// graphs on n vertices, each carrying a replayable trace.
inline Catalog enumerate_laman(int n, int jobs = 1) {
    if (n < 3 || n > 10) throw std::invalid_argument("enumerate_laman: n must be in 3..10");

    std::vector<CatalogEntry> level;
    level.push_back({Graph::triangle(), {}, canonical_form(Graph::triangle()), LamanClass::H1});

    for (int size = 3; size < n; ++size) {
        // parallel successor generation + coding, sequential merge
        auto produced = parallel_map<std::vector<CatalogEntry>>(
            level.size(), jobs, [&](size_t idx) {
                std::vector<CatalogEntry> local;
                const CatalogEntry& parent = level[idx];
                for (auto& [h, step] : henneberg_successors_with_steps(parent.graph)) {
                    HennebergTrace trace = parent.trace;
                    trace.steps.push_back(step);
                    local.push_back({h, std::move(trace), canonical_form(h), LamanClass::H1});
                }
                return local;
            });
        std::unordered_map<CanonicalCode, size_t, CanonicalCode::Hash> seen;
        std::vector<CatalogEntry> next;
        for (auto& batch : produced) {
            for (auto& entry : batch) {
                if (seen.emplace(entry.code, next.size()).second) next.push_back(std::move(entry));
            }
        }
        level = std::move(next);
    }

    auto classes = parallel_map<LamanClass>(level.size(), jobs, [&](size_t idx) {
        return classify(level[idx].graph);
    });
    for (size_t i = 0; i < level.size(); ++i) level[i].cls = classes[i];

    std::sort(level.begin(), level.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.code < b.code; });
    Catalog cat;
    cat.n = n;
    cat.entries = std::move(level);
    return cat;
}

}  // namespace rigidbound

#endif
