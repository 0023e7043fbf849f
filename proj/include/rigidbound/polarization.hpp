#ifndef RIGIDBOUND_POLARIZATION_HPP
#define RIGIDBOUND_POLARIZATION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rigidbound/numeric.hpp"
#include "rigidbound/support.hpp"

namespace rigidbound {

// Independent mixed-volume oracle for m <= 4: inclusion-exclusion over
// Minkowski sums,  MV = sum_{S != 0} (-1)^(m-|S|) Vol(sum_{i in S} P_i),
// with exact hull volumes. Deliberately shares no machinery with the
// lifting-based computation.

namespace polar_detail {

// Orientation of d+1 points under a symbolic perturbation: point i gets
// +eta^(2^(i*d+j)) on coordinate j for an infinitesimal eta > 0, which
// puts every input in general position. The sign is read off the lowest
// eta-power with a non-zero coefficient; exponent sets are sets of bit
// positions, compared as binary numbers.
class SosOrientation {
public:
    explicit SosOrientation(const std::vector<std::vector<int64_t>>& pts, int d)
        : pts_(pts), d_(d) {}

    int orient(const std::vector<int>& idx) const {
        // fast path: unperturbed determinant
        int k = d_ + 1;
        std::vector<std::vector<BigInt>> m(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k)));
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < d_; ++c) m[size_t(r)][size_t(c)] = pts_[size_t(idx[size_t(r)])][size_t(c)];
            m[size_t(r)][size_t(d_)] = 1;
        }
        BigInt det = integer_det(std::move(m));
        if (det != 0) return det > 0 ? 1 : -1;
        return perturbed_sign(idx);
    }

private:
    using ExpSet = std::vector<int>;  // bit positions, descending

    static bool exp_less(const ExpSet& a, const ExpSet& b) {
        // compare as binary numbers with the given bits set
        size_t ia = 0, ib = 0;
        while (ia < a.size() && ib < b.size()) {
            if (a[ia] != b[ib]) return a[ia] < b[ib];
            ++ia;
            ++ib;
        }
        return a.size() < b.size() ? (ib < b.size()) : false;
    }

    int perturbed_sign(const std::vector<int>& idx) const {
        int k = d_ + 1;
        std::map<ExpSet, int64_t> poly;
        std::vector<int> perm(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) perm[size_t(i)] = i;
        // permutation expansion; each entry is value + eta^bit (coordinate
        // columns) or the constant 1 (last column)
        do {
            int psign = permutation_sign(perm);
            // iterate subsets of rows taking the eta part; last column has none
            // column of row r is perm[r]
            std::vector<int> eta_rows;
            for (int r = 0; r < k; ++r)
                if (perm[size_t(r)] < d_) eta_rows.push_back(r);
            int t = int(eta_rows.size());
            for (uint32_t mask = 0; mask < (1u << t); ++mask) {
                int64_t coeff = psign;
                ExpSet exps;
                bool zero = false;
                for (int r = 0; r < k && !zero; ++r) {
                    int c = perm[size_t(r)];
                    if (c == d_) continue;  // affine 1
                    int pos = -1;
                    for (int e = 0; e < t; ++e)
                        if (eta_rows[size_t(e)] == r) pos = e;
                    if ((mask >> pos) & 1u) {
                        exps.push_back(idx[size_t(r)] * d_ + c);
                    } else {
                        int64_t v = pts_[size_t(idx[size_t(r)])][size_t(c)];
                        if (v == 0) zero = true;
                        coeff *= v;
                    }
                }
                if (zero) continue;
                std::sort(exps.rbegin(), exps.rend());
                poly[exps] += coeff;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        const ExpSet* best = nullptr;
        for (auto& [e, c] : poly) {
            if (c == 0) continue;
            if (!best || exp_less(e, *best)) best = &e;
        }
        if (!best) throw std::logic_error("sos orientation: identically zero");
        return poly[*best] > 0 ? 1 : -1;
    }

    static int permutation_sign(const std::vector<int>& p) {
        int s = 1;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) s = -s;
        return s;
    }

    const std::vector<std::vector<int64_t>>& pts_;
    int d_;
};

// Exact volume of the convex hull of integer points in dimension d <= 4,
// times d!. Incremental beneath-beyond under the symbolic perturbation;
// cone volumes are measured with the original coordinates, so flat
// slivers contribute zero and the total is exact.
inline BigInt hull_volume_times_dfact(std::vector<std::vector<int64_t>> pts, int d) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (int(pts.size()) <= d) return 0;
    if (d == 1) {
        int64_t lo = pts.front()[0], hi = pts.back()[0];
        return BigInt(hi - lo);
    }

    SosOrientation orient(pts, d);

    auto simplex_det = [&](const std::vector<int>& idx) {
        int k = d + 1;
        std::vector<std::vector<BigInt>> m(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k)));
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < d; ++c) m[size_t(r)][size_t(c)] = pts[size_t(idx[size_t(r)])][size_t(c)];
            m[size_t(r)][size_t(d)] = 1;
        }
        BigInt det = integer_det(std::move(m));
        return det < 0 ? -det : det;
    };

    struct Facet {
        std::vector<int> verts;  // d point indices
        int outside_sign;        // orientation value meaning "beyond"
    };

    // initial simplex: first d+1 points (general position under the
    // perturbation)
    std::vector<int> init(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) init[size_t(i)] = i;
    BigInt vol = simplex_det(init);

    std::vector<Facet> facets;
    for (int skip = 0; skip <= d; ++skip) {
        Facet f;
        for (int i = 0; i <= d; ++i)
            if (i != skip) f.verts.push_back(init[size_t(i)]);
        std::vector<int> probe = f.verts;
        probe.push_back(init[size_t(skip)]);
        f.outside_sign = -orient.orient(probe);  // opposite vertex is inside
        facets.push_back(std::move(f));
    }

    for (int p = d + 1; p < int(pts.size()); ++p) {
        std::vector<size_t> visible;
        for (size_t fi = 0; fi < facets.size(); ++fi) {
            std::vector<int> probe = facets[fi].verts;
            probe.push_back(p);
            if (orient.orient(probe) == facets[fi].outside_sign) visible.push_back(fi);
        }
        if (visible.empty()) continue;

        // horizon ridges: (d-1)-subsets of visible facets seen exactly once
        std::map<std::vector<int>, std::pair<int, int>> ridge;  // ridge -> (count, owner facet)
        for (size_t fi : visible) {
            const auto& v = facets[fi].verts;
            for (int skip = 0; skip < d; ++skip) {
                std::vector<int> r;
                for (int i = 0; i < d; ++i)
                    if (i != skip) r.push_back(v[size_t(i)]);
                std::sort(r.begin(), r.end());
                auto it = ridge.find(r);
                if (it == ridge.end())
                    ridge[r] = {1, int(fi)};
                else
                    it->second.first += 1;
            }
        }

        for (size_t fi : visible) {
            std::vector<int> cone = facets[fi].verts;
            cone.push_back(p);
            vol += simplex_det(cone);
        }

        std::vector<Facet> fresh;
        for (auto& [r, info] : ridge) {
            if (info.first != 1) continue;  // interior to the visible region
            const Facet& owner = facets[size_t(info.second)];
            int w = -1;  // vertex of the owner not on the ridge: beneath the new facet
            for (int v : owner.verts)
                if (std::find(r.begin(), r.end(), v) == r.end()) w = v;
            Facet nf;
            nf.verts = r;
            nf.verts.push_back(p);
            std::vector<int> probe = nf.verts;
            probe.push_back(w);
            nf.outside_sign = -orient.orient(probe);
            fresh.push_back(std::move(nf));
        }

        std::vector<Facet> kept;
        std::set<size_t> vis(visible.begin(), visible.end());
        for (size_t fi = 0; fi < facets.size(); ++fi)
            if (!vis.count(fi)) kept.push_back(std::move(facets[fi]));
        for (auto& f : fresh) kept.push_back(std::move(f));
        facets = std::move(kept);
    }
    return vol;
}

}  // namespace polar_detail

inline BigInt mixed_volume_oracle(const std::vector<Support>& supports) {
    int m = int(supports.size());
    if (m == 0 || m > 4)
        throw std::invalid_argument("mixed_volume_oracle: need 1..4 supports");
    for (const Support& s : supports) {
        if (s.dim != m)
            throw std::invalid_argument("mixed_volume_oracle: dimension mismatch");
        if (s.points.empty()) throw std::invalid_argument("mixed_volume_oracle: empty support");
    }

    BigInt dfact = 1;
    for (int i = 2; i <= m; ++i) dfact *= i;

    BigInt acc = 0;  // m! * sum of signed volumes
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::set<std::vector<int64_t>> sum{std::vector<int64_t>(static_cast<size_t>(m), 0)};
        for (int i = 0; i < m; ++i) {
            if (!((mask >> i) & 1u)) continue;
            std::set<std::vector<int64_t>> next;
            for (const auto& acc_pt : sum) {
                for (const auto& p : supports[size_t(i)].points) {
                    std::vector<int64_t> q(static_cast<size_t>(m));
                    for (int k = 0; k < m; ++k) q[size_t(k)] = acc_pt[size_t(k)] + p[size_t(k)];
                    next.insert(std::move(q));
                }
            }
            sum = std::move(next);
        }
        std::vector<std::vector<int64_t>> pts(sum.begin(), sum.end());
        BigInt v = polar_detail::hull_volume_times_dfact(std::move(pts), m);
        int sgn = ((m - std::popcount(mask)) % 2 == 0) ? 1 : -1;
        acc += sgn > 0 ? v : -v;
    }
    if (acc % dfact != 0)
        throw std::logic_error("mixed_volume_oracle: polarization sum not integral");
    return acc / dfact;
}

}  // namespace rigidbound

#endif
