#ifndef RIGIDBOUND_LP_HPP
#define RIGIDBOUND_LP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rigidbound/numeric.hpp"

namespace rigidbound {

// Exact feasibility of { x in R^dim : lhs·x = rhs (equalities),
// lhs·x >= rhs (inequalities) }. Integer input rows; solved with
// 128-bit rationals and a cpp_rational fallback on overflow.
struct LinearConstraints {
    int dim = 0;
    std::vector<std::pair<std::vector<int64_t>, int64_t>> equalities;
    std::vector<std::pair<std::vector<int64_t>, int64_t>> inequalities;
};

namespace detail {

// Phase-1 simplex with Bland's rule on  M y = b, y >= 0, b >= 0.
// Returns true iff the artificial objective reaches zero.
template <typename Q>
bool phase1_feasible(std::vector<std::vector<Q>>& M, std::vector<Q>& b) {
    size_t R = M.size();
    if (R == 0) return true;
    size_t C = M[0].size();

    // tableau: structural columns, artificial identity, rhs
    std::vector<std::vector<Q>> T(R, std::vector<Q>(C + R + 1, Q(0)));
    for (size_t r = 0; r < R; ++r) {
        for (size_t c = 0; c < C; ++c) T[r][c] = M[r][c];
        T[r][C + r] = Q(1);
        T[r][C + R] = b[r];
    }
    std::vector<size_t> basis(R);
    for (size_t r = 0; r < R; ++r) basis[r] = C + r;

    // objective row: sum of all rows (cost 1 on artificials, 0 elsewhere)
    std::vector<Q> obj(C + R + 1, Q(0));
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c <= C + R; ++c) obj[c] = obj[c] + T[r][c];

    for (;;) {
        // Bland: smallest structural column with positive reduced cost
        size_t enter = C + R;
        for (size_t c = 0; c < C; ++c) {
            if (sign_of(obj[c]) > 0) {
                enter = c;
                break;
            }
        }
        if (enter == C + R) break;

        size_t leave = R;
        Q best_ratio(0);
        for (size_t r = 0; r < R; ++r) {
            if (sign_of(T[r][enter]) <= 0) continue;
            Q ratio = T[r][C + R] / T[r][enter];
            if (leave == R || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == R) break;  // unbounded direction cannot happen in phase 1

        // pivot
        Q piv = T[leave][enter];
        for (size_t c = 0; c <= C + R; ++c) T[leave][c] = T[leave][c] / piv;
        for (size_t r = 0; r < R; ++r) {
            if (r == leave || is_zero(T[r][enter])) continue;
            Q f = T[r][enter];
            for (size_t c = 0; c <= C + R; ++c) T[r][c] = T[r][c] - f * T[leave][c];
        }
        if (!is_zero(obj[enter])) {
            Q f = obj[enter];
            for (size_t c = 0; c <= C + R; ++c) obj[c] = obj[c] - f * T[leave][c];
        }
        basis[leave] = enter;
    }
    return is_zero(obj[C + R]);
}

template <typename Q>
bool feasible_impl(const LinearConstraints& lc) {
    int dim = lc.dim;
    // eliminate equalities: [E | e] row echelon
    std::vector<std::vector<Q>> eq;
    for (auto& [lhs, rhs] : lc.equalities) {
        std::vector<Q> row(static_cast<size_t>(dim) + 1);
        for (int c = 0; c < dim; ++c) row[size_t(c)] = Q((long long)lhs[size_t(c)]);
        row[size_t(dim)] = Q((long long)rhs);
        eq.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < dim && rank < eq.size(); ++c) {
        size_t piv = rank;
        while (piv < eq.size() && is_zero(eq[piv][size_t(c)])) ++piv;
        if (piv == eq.size()) continue;
        std::swap(eq[piv], eq[rank]);
        Q p = eq[rank][size_t(c)];
        for (int cc = 0; cc <= dim; ++cc) eq[rank][size_t(cc)] = eq[rank][size_t(cc)] / p;
        for (size_t r = 0; r < eq.size(); ++r) {
            if (r == rank || is_zero(eq[r][size_t(c)])) continue;
            Q f = eq[r][size_t(c)];
            for (int cc = 0; cc <= dim; ++cc)
                eq[r][size_t(cc)] = eq[r][size_t(cc)] - f * eq[rank][size_t(cc)];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t r = rank; r < eq.size(); ++r)
        if (!is_zero(eq[r][size_t(dim)])) return false;  // inconsistent equalities

    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
        for (int c : pivot_col) is_pivot[size_t(c)] = true;
        for (int c = 0; c < dim; ++c)
            if (!is_pivot[size_t(c)]) free_cols.push_back(c);
    }
    int f = int(free_cols.size());

    // x0: free vars 0, pivot vars from echelon rhs.
    // N: column per free var; pivot rows get -coefficient.
    std::vector<Q> x0(static_cast<size_t>(dim), Q(0));
    for (size_t r = 0; r < rank; ++r) x0[size_t(pivot_col[r])] = eq[r][size_t(dim)];
    // substitute into inequalities: (lhs·N) t >= rhs - lhs·x0
    std::vector<std::vector<Q>> A;
    std::vector<Q> b;
    for (auto& [lhs, rhs] : lc.inequalities) {
        std::vector<Q> row(static_cast<size_t>(f), Q(0));
        Q shift(0);
        for (int c = 0; c < dim; ++c) {
            if (lhs[size_t(c)] == 0) continue;
            Q coeff((long long)lhs[size_t(c)]);
            shift = shift + coeff * x0[size_t(c)];
            // contribution of free vars through pivot rows
        }
        for (int j = 0; j < f; ++j) {
            int fc = free_cols[size_t(j)];
            Q v((long long)lhs[size_t(fc)]);
            for (size_t r = 0; r < rank; ++r) {
                if (lhs[size_t(pivot_col[r])] == 0) continue;
                v = v - Q((long long)lhs[size_t(pivot_col[r])]) * eq[r][size_t(fc)];
            }
            row[size_t(j)] = v;
        }
        A.push_back(std::move(row));
        b.push_back(Q((long long)rhs) - shift);
    }

    if (f == 0) {
        for (const Q& bi : b)
            if (sign_of(bi) > 0) return false;
        return true;
    }

    // A t >= b  ->  [A, -A, -I] y = b, y >= 0; normalize rhs sign
    size_t R = A.size();
    if (R == 0) return true;
    std::vector<std::vector<Q>> M(R, std::vector<Q>(static_cast<size_t>(2 * f) + R, Q(0)));
    std::vector<Q> rhs(R);
    for (size_t r = 0; r < R; ++r) {
        int s = sign_of(b[r]) < 0 ? -1 : 1;
        Q sq((long long)s);
        for (int j = 0; j < f; ++j) {
            M[r][size_t(j)] = sq * A[r][size_t(j)];
            M[r][size_t(f + j)] = -sq * A[r][size_t(j)];
        }
        M[r][size_t(2 * f) + r] = -sq;
        rhs[r] = sq * b[r];
    }
    return phase1_feasible<Q>(M, rhs);
}

}  // namespace detail

inline bool feasible(const LinearConstraints& lc) {
    try {
        return detail::feasible_impl<Rat128>(lc);
    } catch (const NarrowOverflow&) {
        return detail::feasible_impl<BigRat>(lc);
    }
}

// Unique solution of a square integer system, if the matrix is
// nonsingular.
template <typename Q>
std::optional<std::vector<Q>> solve_square(const std::vector<std::vector<int64_t>>& A,
                                           const std::vector<int64_t>& b) {
    size_t k = A.size();
    std::vector<std::vector<Q>> m(k, std::vector<Q>(k + 1));
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < k; ++c) m[r][c] = Q((long long)A[r][c]);
        m[r][k] = Q((long long)b[r]);
    }
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        while (piv < k && is_zero(m[piv][c])) ++piv;
        if (piv == k) return std::nullopt;
        std::swap(m[piv], m[c]);
        Q p = m[c][c];
        for (size_t cc = c; cc <= k; ++cc) m[c][cc] = m[c][cc] / p;
        for (size_t r = 0; r < k; ++r) {
            if (r == c || is_zero(m[r][c])) continue;
            Q f = m[r][c];
            for (size_t cc = c; cc <= k; ++cc) m[r][cc] = m[r][cc] - f * m[c][cc];
        }
    }
    std::vector<Q> x(k);
    for (size_t r = 0; r < k; ++r) x[r] = m[r][k];
    return x;
}

}  // namespace rigidbound

#endif
