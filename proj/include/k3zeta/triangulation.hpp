// Unimodular triangulations of lattice polygons, interior-simplex profiles,
// regular subdivisions from height functions, and Newton polytopes of
// piecewise linear functions on complete 2D fans.
#ifndef K3ZETA_TRIANGULATION_HPP
#define K3ZETA_TRIANGULATION_HPP

#include <array>
#include <string>
#include <vector>

#include "k3zeta/lattice.hpp"

namespace k3zeta {

struct Triangulation {
    std::vector<LatticePoint> points;            // all lattice points, lex-sorted
    std::vector<std::array<int, 3>> triangles;   // index triples into points
    std::vector<std::array<int, 2>> edges;       // derived, deduplicated, sorted
};

// Counts of simplices of a unimodular triangulation not contained in the
// polytope boundary: c0 vertices, c1 edges, c2 triangles.
struct SimplexProfile {
    Int c0 = 0, c1 = 0, c2 = 0;
    friend bool operator==(const SimplexProfile&, const SimplexProfile&) = default;
};

enum class PlacingOrder { Ascending, Descending };

// Placing triangulation on all lattice points of P (dim <= 2): points are
// inserted in lexicographic order and coned over the visible part of the
// running hull. Every triangle produced is lattice-point-free and hence
// unimodular; the result is deterministic for a given canonical input and
// insertion order.
Triangulation unimodular_triangulate(const LatticePolytope& p);
Triangulation placing_triangulation(const LatticePolytope& p, PlacingOrder order);

// Closed-form profile: (1,0,0) for a point, (l-1, l, 0) for a segment,
// (I, (3F-B)/2, F) for a polygon.
SimplexProfile simplex_profile(const LatticePolytope& p);

// Profile counted directly from an explicit triangulation of P.
SimplexProfile profile_from_triangulation(const LatticePolytope& p,
                                          const Triangulation& t);

struct SubdivisionCell {
    std::vector<int> point_indices;  // all input points on the supporting plane
    std::vector<int> hull;           // CCW cell boundary, subset of point_indices
    bool unimodular_triangle = false;
};

struct Subdivision {
    std::vector<SubdivisionCell> cells;
    bool all_unimodular = false;
    std::vector<int> unused_points;  // input points on no cell (above the lower hull)
};

// Projection of the lower faces of conv{(p_i, h_i)}. Cells with more than
// three points are returned as-is, never refined.
Subdivision regular_subdivision(const std::vector<LatticePoint>& points,
                                const std::vector<Int>& heights);

// A piecewise linear function on a complete 2D fan: primitive rays in CCW
// order, one integer covector per maximal cone (rays i, i+1 cyclically),
// agreeing on shared rays.
class FanPL {
public:
    FanPL(std::vector<LatticePoint> rays, std::vector<std::array<Int, 2>> linear_parts);

    // Solve the covectors from values on the rays (cones must be unimodular
    // for integrality; throws otherwise).
    static FanPL from_ray_values(std::vector<LatticePoint> rays, const std::vector<Int>& values);

    const std::vector<LatticePoint>& rays() const { return rays_; }
    const std::vector<std::array<Int, 2>>& linear_parts() const { return parts_; }
    Int value(const LatticePoint& ray_dir) const; // evaluate at any point

    bool convex() const { return convex_; }
    // empty when convex; otherwise names an offending adjacent cone pair
    const std::string& convexity_report() const { return convexity_report_; }

private:
    std::vector<LatticePoint> rays_;
    std::vector<std::array<Int, 2>> parts_;
    bool convex_ = false;
    std::string convexity_report_;
};

// Convex hull of the covectors, translated so the lex-min vertex is the
// origin. Throws on a non-convex function, naming the offending cone pair.
LatticePolytope newton_polytope_of_pl(const FanPL& f);

} // namespace k3zeta

#endif
