// Combinatorial shadow of a toric degeneration: orbits of cells of the
// polyhedral decomposition with their dual polytopes, consistency validation
// against the sphere-triangulation identities, JSON I/O, and the two
// built-in datasets (the quartic K3 and its mirror).
#ifndef K3ZETA_COMPLEX_HPP
#define K3ZETA_COMPLEX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "k3zeta/lattice.hpp"
#include "k3zeta/triangulation.hpp"

namespace k3zeta {

// One orbit of cells: dimension of the cell, how many cells the orbit has,
// and the common dual polytope (a point for dim-2 cells).
struct CellOrbit {
    std::string label;
    int dim = 0;
    Int multiplicity = 1;
    LatticePolytope dual = LatticePolytope::point();

    CellOrbit(std::string label, int dim, Int multiplicity, LatticePolytope dual);

    friend bool operator==(const CellOrbit&, const CellOrbit&) = default;
};

struct DegenerationComplex {
    std::string name;
    std::vector<CellOrbit> orbits;
    Int odp_count = 0; // ordinary double points resolved into lines
    std::string notes;

    friend bool operator==(const DegenerationComplex&, const DegenerationComplex&) = default;
};

// Totals (F, E, V) are face/edge/vertex counts of the induced unimodular
// triangulation of the dual sphere; ok requires V - E + F = 2 and 2E = 3F.
struct ValidationReport {
    Int F = 0, E = 0, V = 0;
    bool ok = false;
    std::vector<std::string> messages;
};

ValidationReport validate(const DegenerationComplex& c);

// "quartic" or "quartic-mirror"
DegenerationComplex builtin_complex(const std::string& name);

// JSON I/O. Schema (keys in this order, integers only in vertex arrays):
// {"name": str, "dimension": 2, "odp_count": int,
//  "orbits": [{"label": str, "dim": 0|1|2, "multiplicity": int,
//              "dual": {"dim": int, "vertices": [[int,...],...]}}]}
// "dual" is omitted exactly when dim == 2. Schema violations are reported
// with JSON-path locations.
DegenerationComplex load_complex(std::istream& in);
DegenerationComplex load_complex_file(const std::string& path);
std::string save_complex(const DegenerationComplex& c);
void save_complex_file(const DegenerationComplex& c, const std::string& path);

// The height table that cuts a facet of the quartic's Newton polytope into 16
// elementary triangles: the 15 lattice points of conv{(0,0),(4,0),(0,4)} with
// heights 10 at corners, 7 at near-corner edge points, 6 at edge midpoints,
// 5 at interior points.
struct FacetTable {
    std::vector<LatticePoint> points;
    std::vector<Int> heights;
};
FacetTable quartic_facet_table();

// The 6-ray fan at an interior facet vertex, with the piecewise linear
// function localized from the facet table (support-function normalization).
FanPL quartic_interior_vertex_fan();

} // namespace k3zeta

#endif
