#ifndef RIGIDBOUND_SUPPORT_HPP
#define RIGIDBOUND_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

namespace rigidbound {

// A lattice point: one exponent per variable in scope.
using LatticePoint = std::vector<int>;

// Finite set of lattice points, the monomial support of one polynomial
// over a declared variable subset. Kept sorted and duplicate-free.
struct Support {
    int dim = 0;
    std::vector<LatticePoint> points;

    void normalize() {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
    }

    bool operator==(const Support&) const = default;
    bool operator<(const Support& o) const {
        return std::tie(dim, points) < std::tie(o.dim, o.points);
    }
};

}  // namespace rigidbound

#endif
