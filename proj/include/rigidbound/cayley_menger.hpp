#ifndef RIGIDBOUND_CAYLEY_MENGER_HPP
#define RIGIDBOUND_CAYLEY_MENGER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rigidbound/graph.hpp"
#include "rigidbound/numeric.hpp"
#include "rigidbound/parallel.hpp"
#include "rigidbound/support.hpp"

namespace rigidbound {

// Squared-distance variable layout for one graph: every edge pair gets a
// generic fixed value, every non-edge pair an unknown with a stable index
// in ascending lexicographic pair order.
struct DistanceAssignment {
    int n = 0;
    std::vector<std::pair<int, int>> unknown_pairs;  // index -> pair (u < v)
    std::vector<int> unknown_of_pair;                // pair rank -> index or -1

    static int pair_rank(int n, int u, int v) {
        if (u > v) std::swap(u, v);
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    }

    static DistanceAssignment for_graph(const Graph& g) {
        DistanceAssignment da;
        da.n = g.vertex_count();
        da.unknown_of_pair.assign(static_cast<size_t>(da.n * (da.n - 1) / 2), -1);
        for (int u = 0; u < da.n; ++u) {
            for (int v = u + 1; v < da.n; ++v) {
                if (!g.has_edge(u, v)) {
                    da.unknown_of_pair[size_t(pair_rank(da.n, u, v))] = int(da.unknown_pairs.size());
                    da.unknown_pairs.emplace_back(u, v);
                }
            }
        }
        return da;
    }

    int unknown_count() const { return int(unknown_pairs.size()); }

    int unknown_index(int u, int v) const {
        return unknown_of_pair[size_t(pair_rank(n, u, v))];
    }
};

// One bordered 5x5 minor: the border of ones plus four chosen vertices.
// `vars` are the unknown indices with both endpoints inside X, ascending;
// `support` the certified monomial support of the minor in those
// unknowns. A minor with no unknowns is a generically non-vanishing
// constant and is flagged unusable.
struct MinorEquation {
    std::array<int, 4> X{};
    std::vector<int> vars;
    Support support;

    bool usable() const { return !vars.empty(); }
};

namespace detail {

// Sparse polynomial over (Z/p) in at most 6 local variables; monomial
// exponents packed 3 bits per variable.
using ModPoly = std::map<uint32_t, uint64_t>;

inline uint32_t mono_mul_var(uint32_t mono, int var) { return mono + (1u << (3 * var)); }

// 5x5 determinant via subset dynamic programming over column masks.
// Entry kinds: 0, 1, scalar residue, or single local variable.
struct CmEntry {
    enum Kind : uint8_t { Zero, One, Scalar, Var } kind = Zero;
    uint64_t value = 0;  // Scalar
    int var = -1;        // Var
};

inline ModPoly cm_det(const std::array<std::array<CmEntry, 5>, 5>& m, uint64_t p) {
    using modarith::addmod;
    using modarith::mulmod;
    std::vector<ModPoly> dp(32);
    dp[0][0u] = 1;  // empty product
    for (int row = 0; row < 5; ++row) {
        std::vector<ModPoly> next(32);
        for (uint32_t mask = 0; mask < 32; ++mask) {
            if (std::popcount(mask) != row || dp[mask].empty()) continue;
            for (int col = 0; col < 5; ++col) {
                if ((mask >> col) & 1u) continue;
                const CmEntry& e = m[size_t(row)][size_t(col)];
                if (e.kind == CmEntry::Zero) continue;
                int sgn = std::popcount(mask >> (col + 1)) & 1;  // inversions added
                uint32_t nmask = mask | (1u << col);
                for (auto& [mono, coeff] : dp[mask]) {
                    uint64_t c = coeff;
                    uint32_t nm = mono;
                    if (e.kind == CmEntry::Scalar)
                        c = mulmod(c, e.value, p);
                    else if (e.kind == CmEntry::Var)
                        nm = mono_mul_var(mono, e.var);
                    if (sgn) c = p - c;
                    auto& slot = next[nmask][nm];
                    slot = addmod(slot, c, p);
                }
            }
        }
        dp = std::move(next);
    }
    ModPoly out;
    for (auto& [mono, coeff] : dp[31])
        if (coeff % p != 0) out[mono] = coeff;
    return out;
}

inline std::vector<LatticePoint> support_points_from(const ModPoly& poly, int k) {
    std::vector<LatticePoint> pts;
    for (auto& [mono, coeff] : poly) {
        LatticePoint pt(static_cast<size_t>(k), 0);
        int total = 0;
        for (int v = 0; v < k; ++v) {
            pt[size_t(v)] = int((mono >> (3 * v)) & 7u);
            total += pt[size_t(v)];
            if (pt[size_t(v)] > 2)
                throw std::logic_error("minor_support: exponent exceeds 2");
        }
        if (total > 3) throw std::logic_error("minor_support: total degree exceeds 3");
        pts.push_back(std::move(pt));
    }
    return pts;
}

}  // namespace detail

// Monomial support of the bordered minor on vertex set X, in the unknown
// squared distances inside X. A monomial is kept iff its coefficient (a
// polynomial in the generic fixed distances) evaluates non-zero at random
// residues modulo a 62-bit prime; evaluations are repeated with fresh
// residues and primes until two consecutive runs agree, so a single
// unlucky zero cannot drop a monomial.
inline MinorEquation minor_support(const Graph& g, const DistanceAssignment& da,
                                   std::array<int, 4> X, uint64_t seed) {
    int n = g.vertex_count();
    std::sort(X.begin(), X.end());
    if (X[0] < 0 || X[3] >= n || X[0] == X[1] || X[1] == X[2] || X[2] == X[3])
        throw std::invalid_argument("minor_support: need four distinct vertices");

    MinorEquation eq;
    eq.X = X;
    std::map<std::pair<int, int>, int> local;  // pair -> local var
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            int u = X[size_t(a)], v = X[size_t(b)];
            if (!g.has_edge(u, v)) {
                int idx = da.unknown_index(u, v);
                local[{u, v}] = -1;  // fill after sorting by global index
                eq.vars.push_back(idx);
            }
        }
    }
    std::sort(eq.vars.begin(), eq.vars.end());
    for (auto& [pair, lv] : local) {
        int gidx = da.unknown_index(pair.first, pair.second);
        lv = int(std::lower_bound(eq.vars.begin(), eq.vars.end(), gidx) - eq.vars.begin());
    }
    int k = int(eq.vars.size());
    eq.support.dim = k;
    if (k == 0) {
        eq.support.points.push_back({});  // constant polynomial, unusable equation
        return eq;
    }

    auto run_once = [&](int attempt) {
        uint64_t p = modarith::kPrimes[size_t(attempt) % 6];
        SplitMix64 rng(mix_seed(seed, uint64_t(attempt) * 0x9e3779b97f4a7c15ull + 1));
        std::array<std::array<detail::CmEntry, 5>, 5> m{};
        for (int a = 1; a < 5; ++a) {
            m[0][size_t(a)].kind = detail::CmEntry::One;
            m[size_t(a)][0].kind = detail::CmEntry::One;
        }
        for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
                int u = X[size_t(a)], v = X[size_t(b)];
                detail::CmEntry e;
                if (g.has_edge(u, v)) {
                    e.kind = detail::CmEntry::Scalar;
                    e.value = rng.range(1, p);
                } else {
                    e.kind = detail::CmEntry::Var;
                    e.var = local[{u, v}];
                }
                m[size_t(a + 1)][size_t(b + 1)] = e;
                m[size_t(b + 1)][size_t(a + 1)] = e;
            }
        }
        return detail::cm_det(m, p);
    };

    std::set<uint32_t> monos;
    int attempt = 0;
    size_t before;
    do {
        before = monos.size();
        for (auto& [mono, coeff] : run_once(attempt)) monos.insert(mono);
        ++attempt;
    } while (attempt < 2 || (monos.size() != before && attempt < 6));

    detail::ModPoly as_poly;
    for (uint32_t mo : monos) as_poly[mo] = 1;
    eq.support.points = detail::support_points_from(as_poly, k);
    eq.support.normalize();
    return eq;
}

// One minor per 4-subset of the vertex set, ascending lexicographic.
inline std::vector<MinorEquation> full_system(const Graph& g, const DistanceAssignment& da,
                                              uint64_t seed, int jobs = 1) {
    int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument("full_system: need at least 4 vertices");
    std::vector<std::array<int, 4>> subsets;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) subsets.push_back({a, b, c, d});
    return parallel_map<MinorEquation>(subsets.size(), jobs, [&](size_t i) {
        const auto& X = subsets[i];
        uint64_t sx = mix_seed(seed, uint64_t(X[0]) | (uint64_t(X[1]) << 8) |
                                         (uint64_t(X[2]) << 16) | (uint64_t(X[3]) << 24));
        return minor_support(g, da, X, sx);
    });
}

}  // namespace rigidbound

#endif
