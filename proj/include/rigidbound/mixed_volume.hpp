#ifndef RIGIDBOUND_MIXED_VOLUME_HPP
#define RIGIDBOUND_MIXED_VOLUME_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rigidbound/lp.hpp"
#include "rigidbound/numeric.hpp"
#include "rigidbound/support.hpp"

namespace rigidbound {

// Normalized mixed volume of m lattice supports in Z^m: the Bernstein
// root count, normalized so that m unit simplices give 1. Computed by
// random integer lifting and depth-first enumeration of lower-hull mixed
// cells, all in exact arithmetic; every call runs two independent
// liftings and insists they agree.

struct MixedVolumeOptions {
    // abort once the running cell sum exceeds this value (both liftings);
    // the caller then only learns "greater than the threshold"
    std::optional<BigInt> abort_above;
};

struct MixedVolumeResult {
    std::optional<BigInt> value;  // empty iff aborted past abort_above
    bool degenerate_input = false;
};

namespace detail {

struct LiftingDegenerate : std::runtime_error {
    LiftingDegenerate() : std::runtime_error("degenerate lifting") {}
};

struct MvAborted {};

// One support prepared for enumeration: deduplicated points plus
// lifting values.
struct LiftedSupport {
    std::vector<LatticePoint> pts;
    std::vector<int64_t> lift;
    std::vector<std::pair<int, int>> edges;  // admissible pairs (lower-hull)
};

class CellEnumerator {
public:
    CellEnumerator(const std::vector<Support>& supports, SplitMix64& rng,
                   const std::optional<BigInt>& abort_above)
        : m_(int(supports.size())), abort_above_(abort_above) {
        sup_.resize(supports.size());
        for (size_t i = 0; i < supports.size(); ++i) {
            sup_[i].pts = supports[i].points;
            sup_[i].lift.resize(sup_[i].pts.size());
            for (auto& w : sup_[i].lift) w = int64_t(rng.range(0, uint64_t(1) << 20));
        }
    }

    BigInt run() {
        for (auto& s : sup_) single_support_edges(s);
        order_.resize(static_cast<size_t>(m_));
        for (int i = 0; i < m_; ++i) order_[size_t(i)] = i;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return std::make_pair(sup_[size_t(a)].edges.size(), a) <
                   std::make_pair(sup_[size_t(b)].edges.size(), b);
        });
        total_ = 0;
        chosen_.assign(static_cast<size_t>(m_), {-1, -1});
        dfs(0);
        return total_;
    }

private:
    // Pairs {a,b} that can lie on the lower hull of this lifted support
    // alone; a necessary condition for membership in any mixed cell.
    void single_support_edges(LiftedSupport& s) {
        s.edges.clear();
        int np = int(s.pts.size());
        for (int a = 0; a < np; ++a) {
            for (int b = a + 1; b < np; ++b) {
                LinearConstraints lc;
                lc.dim = m_;
                add_pair_constraints(lc, s, a, b);
                if (feasible(lc)) s.edges.emplace_back(a, b);
            }
        }
    }

    void add_pair_constraints(LinearConstraints& lc, const LiftedSupport& s, int a, int b) const {
        const LatticePoint& pa = s.pts[size_t(a)];
        const LatticePoint& pb = s.pts[size_t(b)];
        std::vector<int64_t> dir(static_cast<size_t>(m_));
        for (int c = 0; c < m_; ++c) dir[size_t(c)] = int64_t(pa[size_t(c)] - pb[size_t(c)]);
        lc.equalities.emplace_back(dir, s.lift[size_t(b)] - s.lift[size_t(a)]);
        for (int c = 0; c < int(s.pts.size()); ++c) {
            if (c == a || c == b) continue;
            std::vector<int64_t> row(static_cast<size_t>(m_));
            for (int k = 0; k < m_; ++k)
                row[size_t(k)] = int64_t(s.pts[size_t(c)][size_t(k)] - pa[size_t(k)]);
            lc.inequalities.emplace_back(row, s.lift[size_t(a)] - s.lift[size_t(c)]);
        }
    }

    bool directions_independent(int depth) const {
        std::vector<std::vector<__int128>> rows;
        for (int j = 0; j <= depth; ++j) {
            int i = order_[size_t(j)];
            auto [a, b] = chosen_[size_t(j)];
            std::vector<__int128> row(static_cast<size_t>(m_));
            for (int k = 0; k < m_; ++k)
                row[size_t(k)] = __int128(sup_[size_t(i)].pts[size_t(a)][size_t(k)]) -
                                 sup_[size_t(i)].pts[size_t(b)][size_t(k)];
            rows.push_back(std::move(row));
        }
        return integer_rank_i128(std::move(rows)) == depth + 1;
    }

    bool partial_feasible(int depth) const {
        LinearConstraints lc;
        lc.dim = m_;
        for (int j = 0; j <= depth; ++j) {
            int i = order_[size_t(j)];
            auto [a, b] = chosen_[size_t(j)];
            add_pair_constraints(lc, sup_[size_t(i)], a, b);
        }
        return feasible(lc);
    }

    // With all m edges fixed the equalities pin alpha; a cell is valid
    // iff every non-chosen point sits strictly above. Any tie is an
    // exact witness of a non-fine subdivision.
    void close_cell() {
        std::vector<std::vector<int64_t>> A(static_cast<size_t>(m_), std::vector<int64_t>(static_cast<size_t>(m_)));
        std::vector<int64_t> rhs(static_cast<size_t>(m_));
        for (int j = 0; j < m_; ++j) {
            int i = order_[size_t(j)];
            auto [a, b] = chosen_[size_t(j)];
            const auto& s = sup_[size_t(i)];
            for (int k = 0; k < m_; ++k)
                A[size_t(j)][size_t(k)] = int64_t(s.pts[size_t(a)][size_t(k)] - s.pts[size_t(b)][size_t(k)]);
            rhs[size_t(j)] = s.lift[size_t(b)] - s.lift[size_t(a)];
        }
        bool is_cell;
        try {
            is_cell = optimal_cell<Rat128>(A, rhs);
        } catch (const NarrowOverflow&) {
            is_cell = optimal_cell<BigRat>(A, rhs);
        }
        if (!is_cell) return;

        std::vector<std::vector<BigInt>> M(static_cast<size_t>(m_), std::vector<BigInt>(static_cast<size_t>(m_)));
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k) M[size_t(j)][size_t(k)] = A[size_t(j)][size_t(k)];
        BigInt det = integer_det(std::move(M));
        if (det < 0) det = -det;
        total_ += det;
        if (abort_above_ && total_ > *abort_above_) throw MvAborted{};
    }

    template <typename Q>
    bool optimal_cell(const std::vector<std::vector<int64_t>>& A,
                      const std::vector<int64_t>& rhs) const {
        std::optional<std::vector<Q>> alpha = solve_square<Q>(A, rhs);
        if (!alpha) return false;  // dependent directions: not a full cell
        for (int j = 0; j < m_; ++j) {
            int i = order_[size_t(j)];
            auto [a, b] = chosen_[size_t(j)];
            const auto& s = sup_[size_t(i)];
            Q la = lifted_value<Q>(s, a, *alpha);
            for (int c = 0; c < int(s.pts.size()); ++c) {
                if (c == a || c == b) continue;
                Q diff = lifted_value<Q>(s, c, *alpha) - la;
                int cmp = sign_of(static_cast<Q>(diff));
                if (cmp == 0) throw LiftingDegenerate();
                if (cmp < 0) return false;  // not optimal: not a cell
            }
        }
        return true;
    }

    template <typename Q>
    Q lifted_value(const LiftedSupport& s, int idx, const std::vector<Q>& alpha) const {
        Q v((long long)s.lift[size_t(idx)]);
        for (int k = 0; k < m_; ++k)
            v = v + Q((long long)s.pts[size_t(idx)][size_t(k)]) * alpha[size_t(k)];
        return v;
    }

    void dfs(int depth) {
        if (depth == m_) {
            close_cell();
            return;
        }
        int i = order_[size_t(depth)];
        for (auto [a, b] : sup_[size_t(i)].edges) {
            chosen_[size_t(depth)] = {a, b};
            if (!directions_independent(depth)) continue;
            // depth 0 feasibility is the admissibility test itself
            if (depth > 0 && depth + 1 < m_ && !partial_feasible(depth)) continue;
            dfs(depth + 1);
        }
        chosen_[size_t(depth)] = {-1, -1};
    }

    int m_;
    std::optional<BigInt> abort_above_;
    std::vector<LiftedSupport> sup_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> chosen_;
    BigInt total_;
};

inline std::optional<BigInt> mv_one_lifting(const std::vector<Support>& supports,
                                            SplitMix64& rng,
                                            const std::optional<BigInt>& abort_above) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        SplitMix64 fork(rng.next());
        try {
            CellEnumerator enumerator(supports, fork, abort_above);
            return enumerator.run();
        } catch (const LiftingDegenerate&) {
            continue;  // fresh lifting
        } catch (const MvAborted&) {
            return std::nullopt;
        }
    }
    throw std::runtime_error("mixed_volume: 10 degenerate liftings in a row");
}

}  // namespace detail

inline MixedVolumeResult mixed_volume_full(const std::vector<Support>& supports, uint64_t seed,
                                           const MixedVolumeOptions& opts = {}) {
    int m = int(supports.size());
    if (m == 0) throw std::invalid_argument("mixed_volume: no supports");
    std::vector<Support> clean(supports);
    for (auto& s : clean) {
        if (s.dim != m)
            throw std::invalid_argument("mixed_volume: support dimension != number of supports");
        if (s.points.empty()) throw std::invalid_argument("mixed_volume: empty support");
        s.normalize();
    }
    MixedVolumeResult res;
    for (auto& s : clean) {
        if (s.points.size() < 2) {
            // all points coincide: no edge can enter a cell
            res.value = BigInt(0);
            res.degenerate_input = true;
            return res;
        }
    }

    SplitMix64 rng(mix_seed(seed, 0xb5297a4d3f4ca11full));
    std::optional<BigInt> first = detail::mv_one_lifting(clean, rng, opts.abort_above);
    if (!first) return res;  // past the threshold; value left empty
    std::optional<BigInt> second = detail::mv_one_lifting(clean, rng, opts.abort_above);
    if (!second || *first != *second)
        throw std::runtime_error("mixed_volume: liftings disagree");
    res.value = *first;
    return res;
}

inline BigInt mixed_volume(const std::vector<Support>& supports, uint64_t seed = 1) {
    MixedVolumeResult r = mixed_volume_full(supports, seed);
    return *r.value;
}

}  // namespace rigidbound

#endif
