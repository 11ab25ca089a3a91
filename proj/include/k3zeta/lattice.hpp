// Exact integer lattice geometry in ambient rank <= 2: points, segments,
// strictly convex polygons, lattice-point counts and enumeration.
#ifndef K3ZETA_LATTICE_HPP
#define K3ZETA_LATTICE_HPP

#include <compare>
#include <vector>

#include "k3zeta/checked.hpp"

namespace k3zeta {

struct LatticePoint {
    // ambient lattice rank = coords.size(); rank 0 is the point of Z^0
    std::vector<Int> coords;

    LatticePoint() = default;
    LatticePoint(std::initializer_list<Int> c) : coords(c) {}
    explicit LatticePoint(std::vector<Int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    Int operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator*(Int s, const LatticePoint& a);

// gcd of the absolute values of the entries; 0 only for the zero vector
Int content(const LatticePoint& v);

// 2D cross product (b - a) x (c - a); sign gives orientation of the triple
Int cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// A lattice polytope of dimension 0, 1 or 2.
//   dim 0: no stored vertices (the unique point of Z^0)
//   dim 1: two distinct endpoints, canonically ordered
//   dim 2: strictly convex vertex cycle, counter-clockwise, starting at the
//          lexicographically smallest vertex
// Construction canonicalizes and rejects degenerate input.
class LatticePolytope {
public:
    static LatticePolytope point();
    static LatticePolytope segment(const LatticePoint& a, const LatticePoint& b);
    static LatticePolytope polygon(std::vector<LatticePoint> vertices);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }

    // lattice length of a dim-1 polytope
    Int lattice_length() const;

    // copy translated by t / translated so the lex-min vertex is the origin
    LatticePolytope translated(const LatticePoint& t) const;
    LatticePolytope translated_to_origin() const;

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

private:
    LatticePolytope(int dim, std::vector<LatticePoint> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {}

    int dim_ = 0;
    std::vector<LatticePoint> vertices_;
};

// twice the Euclidean area (shoelace); rejects dim != 2
Int normalized_area(const LatticePolytope& p);

// number of lattice points on the boundary; rejects dim != 2
Int boundary_lattice_count(const LatticePolytope& p);

// number of lattice points strictly inside, via Pick's theorem
Int interior_lattice_count(const LatticePolytope& p);

// all lattice points of n*P, or of its relative interior; lex-sorted
std::vector<LatticePoint> enumerate_dilate(const LatticePolytope& p, Int n,
                                           bool interior_only);

// all lattice points of P itself, lex-sorted
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

// boundary lattice points of a dim-2 polytope as a CCW cycle starting at the
// lex-min vertex (includes lattice points interior to edges)
std::vector<LatticePoint> boundary_cycle(const LatticePolytope& p);

// strict 2D convex hull (monotone chain); vertices only, CCW, lex-min first.
// Collinear configurations yield fewer than 3 hull points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

} // namespace k3zeta

#endif
