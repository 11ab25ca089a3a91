// Seeded generator of random convex lattice polygons for property checks.
// Uses raw mt19937_64 output (not std distributions) so sequences are
// identical across standard libraries.
#ifndef K3ZETA_RANDOM_POLYGON_HPP
#define K3ZETA_RANDOM_POLYGON_HPP

#include <random>

#include "k3zeta/lattice.hpp"

namespace k3zeta {

inline Int rand_range(std::mt19937_64& rng, Int lo, Int hi)
{
    return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// convex hull of a handful of random points in [0, coord_bound]^2; retries
// until the hull is two-dimensional
inline LatticePolytope random_convex_polygon(std::mt19937_64& rng, Int coord_bound)
{
    for (;;) {
        int n = static_cast<int>(rand_range(rng, 4, 12));
        std::vector<LatticePoint> pts;
        pts.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            pts.push_back(LatticePoint{rand_range(rng, 0, coord_bound),
                                       rand_range(rng, 0, coord_bound)});
        auto hull = convex_hull(pts);
        if (hull.size() >= 3)
            return LatticePolytope::polygon(hull);
    }
}

} // namespace k3zeta

#endif
