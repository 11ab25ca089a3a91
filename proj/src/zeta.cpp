#include "k3zeta/zeta.hpp"

#include <sstream>
#include <stdexcept>

namespace k3zeta {

LPolynomial stratum_class(int codim)
{
    if (codim < 0 || codim > 2)
        throw std::invalid_argument("codimension must be 0, 1 or 2");
    LPolynomial lm1 = LPolynomial::from_coeffs({-1, 1});
    LPolynomial r(1);
    for (int i = 0; i < 2 - codim; ++i)
        r = r * lm1;
    return r;
}

UBasisSeries orbit_contribution(const CellOrbit& o)
{
    SimplexProfile s = simplex_profile(o.dual);
    UBasisSeries z(
        {LPolynomial(s.c0), LPolynomial(s.c1), LPolynomial(s.c2)});
    return o.multiplicity * z;
}

ZetaResult zeta(const DegenerationComplex& c)
{
    ValidationReport report = validate(c);
    if (!report.ok) {
        std::ostringstream os;
        os << "complex '" << c.name << "' fails validation:";
        for (const auto& m : report.messages)
            os << " " << m << ";";
        throw std::invalid_argument(os.str());
    }

    const LPolynomial lm1 = LPolynomial::from_coeffs({-1, 1});
    const UBasisSeries odp_term =
        (c.odp_count * LPolynomial::lefschetz()) * UBasisSeries::u_power(1);

    // per-orbit route: each codim-r cell carries (L-1)^r times its open
    // stratum class, which is (L-1)^(2-r) for these torus strata
    UBasisSeries per_orbit;
    for (const auto& o : c.orbits) {
        int codim = 2 - o.dim;
        LPolynomial factor = stratum_class(codim);
        for (int i = 0; i < codim; ++i)
            factor = factor * lm1;
        per_orbit = per_orbit + factor * orbit_contribution(o);
    }

    // grouped route through the aggregate triangulation counts
    UBasisSeries grouped =
        (lm1 * lm1) * UBasisSeries({LPolynomial(report.V), LPolynomial(report.E),
                                    LPolynomial(report.F)});
    if (per_orbit != grouped)
        throw std::logic_error("per-orbit and aggregate zeta routes disagree");

    ZetaResult r;
    r.series = odp_term + per_orbit;
    r.sv = to_sv_form(r.series);
    r.volume = motivic_volume(r.series);
    return r;
}

std::vector<Int> l_series_oracle(const LatticePolytope& p, int N)
{
    if (N < 1 || N > 50)
        throw std::invalid_argument("oracle order must be between 1 and 50");
    if (p.dim() > 2)
        throw std::invalid_argument("oracle supports dim <= 2 only");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(N));
    for (Int n = 1; n <= N; ++n)
        out.push_back(static_cast<Int>(enumerate_dilate(p, n, true).size()));
    return out;
}

Int t_invariant(const DegenerationComplex& c)
{
    Int t = 0;
    for (const auto& o : c.orbits)
        if (o.dim == 0)
            t = checked_add(t, checked_mul(o.multiplicity, normalized_area(o.dual)));
    return t;
}

} // namespace k3zeta
