#ifndef RIGIDBOUND_SUBSYSTEM_HPP
#define RIGIDBOUND_SUBSYSTEM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "rigidbound/cayley_menger.hpp"
#include "rigidbound/global_rigidity.hpp"
#include "rigidbound/graph.hpp"
#include "rigidbound/henneberg.hpp"
#include "rigidbound/mixed_volume.hpp"
#include "rigidbound/reductions.hpp"

namespace rigidbound {

// A square selection of minor equations: one equation per unknown in
// `vars`, every equation's unknowns inside `vars`, their union covering
// it, and the uniqueness certificate holding for `vars`.
struct Subsystem {
    std::vector<int> vars;                 // ascending unknown indices
    std::vector<MinorEquation> equations;  // selection order = pool order
    BigInt mv;
};

struct SearchBudget {
    int max_vars = 8;
    int64_t max_candidates = 100000;
};

struct SearchStats {
    int64_t candidates = 0;
    int64_t isolation_rejected = 0;
    bool budget_exhausted = false;
};

namespace detail {

// Embed an equation's support (over its own vars) into the coordinate
// space of the sorted variable set S.
inline Support embed_support(const MinorEquation& eq, const std::vector<int>& svars) {
    Support out;
    out.dim = int(svars.size());
    for (const LatticePoint& p : eq.support.points) {
        LatticePoint q(svars.size(), 0);
        for (size_t i = 0; i < eq.vars.size(); ++i) {
            size_t pos = size_t(std::lower_bound(svars.begin(), svars.end(), eq.vars[i]) -
                                svars.begin());
            q[pos] = p[i];
        }
        out.points.push_back(std::move(q));
    }
    out.normalize();
    return out;
}

// Randomized root-isolation certificate: at a random planar configuration
// (mod a 62-bit prime) the Jacobian of the selected minors with respect
// to the selected unknowns is nonsingular. Nonsingular at one random
// point certifies generic nonsingularity; singular triggers retries with
// fresh points and primes before the candidate is declared non-isolated.
inline bool jacobian_isolated(const Graph& g, const DistanceAssignment& da,
                              const std::vector<const MinorEquation*>& eqs,
                              const std::vector<int>& svars, uint64_t seed) {
    using namespace modarith;
    int n = g.vertex_count();
    int k = int(svars.size());
    for (int attempt = 0; attempt < 3; ++attempt) {
        uint64_t p = kPrimes[size_t(attempt + 2) % 6];
        SplitMix64 rng(mix_seed(seed, 0xa076cc1full + uint64_t(attempt)));
        std::vector<std::pair<uint64_t, uint64_t>> pts(static_cast<size_t>(n));
        for (auto& pt : pts) pt = {rng.range(0, p), rng.range(0, p)};
        auto dist = [&](int u, int v) {
            uint64_t dx = submod(pts[size_t(u)].first, pts[size_t(v)].first, p);
            uint64_t dy = submod(pts[size_t(u)].second, pts[size_t(v)].second, p);
            return addmod(mulmod(dx, dx, p), mulmod(dy, dy, p), p);
        };
        std::vector<std::vector<uint64_t>> jac(static_cast<size_t>(k), std::vector<uint64_t>(static_cast<size_t>(k), 0));
        for (size_t r = 0; r < eqs.size(); ++r) {
            const MinorEquation& eq = *eqs[r];
            uint64_t m[5][5] = {};
            for (int a = 1; a < 5; ++a) m[0][a] = m[a][0] = 1;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    uint64_t v = dist(eq.X[size_t(a)], eq.X[size_t(b)]);
                    m[a + 1][b + 1] = v;
                    m[b + 1][a + 1] = v;
                }
            for (int var : eq.vars) {
                auto [u, v] = da.unknown_pairs[size_t(var)];
                int a = -1, b = -1;
                for (int t = 0; t < 4; ++t) {
                    if (eq.X[size_t(t)] == u) a = t + 1;
                    if (eq.X[size_t(t)] == v) b = t + 1;
                }
                // derivative of the determinant in the symmetric entry:
                // twice the (a,b) cofactor
                std::vector<std::vector<uint64_t>> sub;
                for (int rr = 0; rr < 5; ++rr) {
                    if (rr == a) continue;
                    std::vector<uint64_t> row;
                    for (int cc = 0; cc < 5; ++cc)
                        if (cc != b) row.push_back(m[rr][cc]);
                    sub.push_back(std::move(row));
                }
                uint64_t co = det_mod(std::move(sub), p);
                if ((a + b) % 2 == 1) co = (p - co) % p;
                size_t col = size_t(std::lower_bound(svars.begin(), svars.end(), var) -
                                    svars.begin());
                jac[r][col] = mulmod(2, co, p);
            }
        }
        if (det_mod(std::move(jac), p) != 0) return true;
    }
    return false;
}

}  // namespace detail

struct SubsystemSearchOptions {
    SearchBudget budget;
    bool require_isolated = false;  // demand the Jacobian certificate per candidate
};

inline void detail_enumerate_selections(
    const Graph& g, const DistanceAssignment& da, const std::vector<const MinorEquation*>& pool,
    const std::vector<int>& svars, const SubsystemSearchOptions& opts, uint64_t seed,
    SearchStats& st, std::map<std::vector<Support>, BigInt>& memo,
    std::optional<Subsystem>& best);

// Ascending search over variable subsets and equation selections: for
// each uniquely-determining S (|S| ascending, then lexicographic), every
// |S|-selection from the minors with unknowns inside S whose union
// covers S, keeping the candidate of smallest mixed volume seen within
// budget. Ties resolve to the earliest candidate in enumeration order,
// which is lexicographic in (|S|, S, selection).
inline std::optional<Subsystem> find_best_subsystem(const Graph& g, const DistanceAssignment& da,
                                                    const std::vector<MinorEquation>& system,
                                                    const SubsystemSearchOptions& opts,
                                                    uint64_t seed, SearchStats* stats = nullptr) {
    int m = da.unknown_count();
    SearchStats local;
    SearchStats& st = stats ? *stats : local;

    // pre-filter: usable minors, deduplicated by (vars, support)
    std::vector<const MinorEquation*> pool_all;
    {
        std::set<std::pair<std::vector<int>, std::vector<LatticePoint>>> seen;
        for (const MinorEquation& eq : system) {
            if (!eq.usable()) continue;
            if (seen.emplace(eq.vars, eq.support.points).second) pool_all.push_back(&eq);
        }
    }

    std::optional<Subsystem> best;
    std::map<std::vector<Support>, BigInt> memo;

    int max_k = std::min(opts.budget.max_vars, m);
    std::vector<int> svars;
    for (int k = 1; k <= max_k && !st.budget_exhausted; ++k) {
        // lexicographic combinations of variable indices
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
        for (;;) {
            svars = comb;
            if (uniquely_determining(g, da, svars)) {
                std::vector<const MinorEquation*> pool;
                for (const MinorEquation* eq : pool_all) {
                    if (std::includes(svars.begin(), svars.end(), eq->vars.begin(), eq->vars.end()))
                        pool.push_back(eq);
                }
                if (int(pool.size()) >= k) {
                    std::vector<int> cover_union;
                    for (auto* eq : pool)
                        for (int v : eq->vars) cover_union.push_back(v);
                    std::sort(cover_union.begin(), cover_union.end());
                    cover_union.erase(std::unique(cover_union.begin(), cover_union.end()),
                                      cover_union.end());
                    if (cover_union == svars) {
                        detail_enumerate_selections(g, da, pool, svars, opts, seed, st, memo, best);
                        if (st.budget_exhausted) break;
                    }
                }
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && comb[size_t(i)] == m - k + i) --i;
            if (i < 0) break;
            ++comb[size_t(i)];
            for (int j = i + 1; j < k; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
    }
    return best;
}

namespace detail {
inline void enumerate_selections_impl(
    const Graph& g, const DistanceAssignment& da, const std::vector<const MinorEquation*>& pool,
    const std::vector<int>& svars, const SubsystemSearchOptions& opts, uint64_t seed,
    SearchStats& st, std::map<std::vector<Support>, BigInt>& memo, std::optional<Subsystem>& best,
    std::vector<int>& pick, std::vector<int>& covered, size_t from) {
    int k = int(svars.size());
    if (int(pick.size()) == k) {
        if (covered != svars) return;
        if (st.candidates >= opts.budget.max_candidates) {
            st.budget_exhausted = true;
            return;
        }
        ++st.candidates;
        std::vector<const MinorEquation*> eqs;
        for (int idx : pick) eqs.push_back(pool[size_t(idx)]);
        if (opts.require_isolated && !jacobian_isolated(g, da, eqs, svars, seed)) {
            ++st.isolation_rejected;
            return;
        }
        std::vector<Support> sups;
        for (auto* eq : eqs) sups.push_back(embed_support(*eq, svars));
        std::vector<Support> key = sups;
        std::sort(key.begin(), key.end());

        std::optional<BigInt> mv;
        auto it = memo.find(key);
        if (it != memo.end()) {
            mv = it->second;
        } else {
            MixedVolumeOptions mvo;
            if (best) mvo.abort_above = best->mv;
            uint64_t mv_seed = 0xcbf29ce484222325ull;
            for (const Support& s : key)
                for (const auto& p : s.points)
                    for (int e : p) mv_seed = (mv_seed ^ uint64_t(e + 7)) * 0x100000001b3ull;
            MixedVolumeResult r = mixed_volume_full(sups, mix_seed(seed, mv_seed), mvo);
            if (r.value) {
                mv = *r.value;
                memo.emplace(std::move(key), *r.value);
            }
        }
        if (!mv || *mv == 0) return;  // aborted past best, or degenerate candidate
        if (!best || *mv < best->mv) {
            Subsystem sub;
            sub.vars = svars;
            for (auto* eq : eqs) sub.equations.push_back(*eq);
            sub.mv = *mv;
            best = std::move(sub);
        }
        return;
    }
    if (st.budget_exhausted) return;
    size_t slots = size_t(k) - pick.size();
    for (size_t i = from; i < pool.size(); ++i) {
        if (pool.size() - i < slots) break;
        std::vector<int> merged;
        std::set_union(covered.begin(), covered.end(), pool[i]->vars.begin(), pool[i]->vars.end(),
                       std::back_inserter(merged));
        pick.push_back(int(i));
        std::swap(covered, merged);
        enumerate_selections_impl(g, da, pool, svars, opts, seed, st, memo, best, pick, covered,
                                  i + 1);
        std::swap(covered, merged);
        pick.pop_back();
        if (st.budget_exhausted) return;
    }
}
}  // namespace detail

inline void detail_enumerate_selections(
    const Graph& g, const DistanceAssignment& da, const std::vector<const MinorEquation*>& pool,
    const std::vector<int>& svars, const SubsystemSearchOptions& opts, uint64_t seed,
    SearchStats& st, std::map<std::vector<Support>, BigInt>& memo,
    std::optional<Subsystem>& best) {
    std::vector<int> pick;
    std::vector<int> covered;
    detail::enumerate_selections_impl(g, da, pool, svars, opts, seed, st, memo, best, pick,
                                      covered, 0);
}

enum class BoundRule { H1, DEGREE2, GLUING, MIXED_VOLUME };

inline const char* to_string(BoundRule r) {
    switch (r) {
        case BoundRule::H1: return "H1";
        case BoundRule::DEGREE2: return "DEGREE2";
        case BoundRule::GLUING: return "GLUING";
        case BoundRule::MIXED_VOLUME: return "MIXED_VOLUME";
    }
    return "?";
}

// Per-graph bound record: the first applicable rule in the fixed order
// H1, DEGREE2, GLUING, MIXED_VOLUME, with its witness. An empty bound is
// the explicit NOT_BOUNDED outcome (search exhausted with no valid
// candidate and no cheap rule).
struct BoundReport {
    CanonicalCode code;
    int n = 0;
    LamanClass cls = LamanClass::H1;
    BoundRule rule = BoundRule::H1;
    std::optional<BigInt> bound;
    HennebergTrace trace;                // H1 witness
    int degree2_vertex = -1;             // DEGREE2 witness
    std::optional<GluingWitness> gluing; // GLUING witness
    std::optional<Subsystem> subsystem;  // MIXED_VOLUME witness
    SearchStats stats;
};

struct BoundContext {
    MaxEmbeddingTable table;
    SubsystemSearchOptions search;
    uint64_t seed = 1;
    int jobs = 1;
};

inline BoundReport graph_bound(const CatalogEntry& entry, const BoundContext& ctx) {
    const Graph& g = entry.graph;
    BoundReport rep;
    rep.code = entry.code;
    rep.n = g.vertex_count();
    rep.cls = entry.cls;

    if (entry.cls == LamanClass::H1) {
        rep.rule = BoundRule::H1;
        rep.bound = BigInt(h1_bound(rep.n));
        rep.trace = entry.trace;
        return rep;
    }
    if (auto d2 = degree2_bound(g, ctx.table)) {
        rep.rule = BoundRule::DEGREE2;
        rep.bound = BigInt(*d2);
        for (int v = 0; v < rep.n; ++v)
            if (g.degree(v) == 2) {
                rep.degree2_vertex = v;
                break;
            }
        return rep;
    }
    if (auto w = find_gluing(g)) {
        if (auto gb = gluing_bound(*w, ctx.table)) {
            rep.rule = BoundRule::GLUING;
            rep.bound = BigInt(*gb);
            rep.gluing = w;
            return rep;
        }
    }
    rep.rule = BoundRule::MIXED_VOLUME;
    DistanceAssignment da = DistanceAssignment::for_graph(g);
    uint64_t graph_seed = mix_seed(ctx.seed, CanonicalCode::Hash{}(entry.code));
    std::vector<MinorEquation> system = full_system(g, da, graph_seed, ctx.jobs);
    std::optional<Subsystem> sub =
        find_best_subsystem(g, da, system, ctx.search, graph_seed, &rep.stats);
    if (sub) {
        rep.bound = sub->mv;
        rep.subsystem = std::move(sub);
    }
    return rep;
}

}  // namespace rigidbound

#endif
