// The zeta engine: evaluates the degeneration zeta function from orbit data,
// with a brute-force lattice-count oracle and the triple-point invariant t.
#ifndef K3ZETA_ZETA_HPP
#define K3ZETA_ZETA_HPP

#include "k3zeta/complex.hpp"
#include "k3zeta/motivic.hpp"

namespace k3zeta {

struct ZetaResult {
    UBasisSeries series;
    SVForm sv;
    LPolynomial volume; // -formal_limit(series)
};

// class of an open torus stratum of codimension r on a surface: (L-1)^(2-r).
// All strata of the in-scope degenerations are tori; this identity is an
// observation about them, not a general fact about log-smooth models.
LPolynomial stratum_class(int codim);

// multiplicity * (c0 u + c1 u^2 + c2 u^3) for the dual's simplex profile;
// the (L-1)^2 stratum factor is applied by zeta(), not here
UBasisSeries orbit_contribution(const CellOrbit& o);

// series = m*L*u + (L-1)^2 * sum of orbit contributions. Computed twice,
// per-orbit and from the aggregate (F, E, V) totals; the two must agree.
// Refuses a complex that fails validation.
ZetaResult zeta(const DegenerationComplex& c);

// l(n) for n = 1..N by direct enumeration of interior lattice points of the
// cone over P at height n. Guard: N <= 50.
std::vector<Int> l_series_oracle(const LatticePolytope& p, int N);

// sum over dim-0 orbits of multiplicity * normalized_area(dual): the number
// of triangles in a unimodular triangulation of the dual sphere
Int t_invariant(const DegenerationComplex& c);

} // namespace k3zeta

#endif
