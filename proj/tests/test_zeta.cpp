#include <doctest.h>

#include "k3zeta/random_polygon.hpp"
#include "k3zeta/zeta.hpp"

using namespace k3zeta;

namespace {

LPolynomial lm1sq()
{
    return LPolynomial::from_coeffs({1, -2, 1});
}

DegenerationComplex tetrahedron_toy(Int odp = 24)
{
    DegenerationComplex c;
    c.name = "tetrahedron";
    c.odp_count = odp;
    c.orbits = {
        {"v", 0, 4, LatticePolytope::polygon({{0, 0}, {1, 0}, {0, 1}})},
        {"e", 1, 6, LatticePolytope::segment({0}, {1})},
        {"f", 2, 4, LatticePolytope::point()},
    };
    return c;
}

UBasisSeries profile_series(const LatticePolytope& p)
{
    SimplexProfile s = simplex_profile(p);
    return UBasisSeries({LPolynomial(s.c0), LPolynomial(s.c1), LPolynomial(s.c2)});
}

} // namespace

TEST_CASE("stratum classes are powers of L - 1")
{
    CHECK(stratum_class(0) == LPolynomial::from_coeffs({1, -2, 1}));
    CHECK(stratum_class(1) == LPolynomial::from_coeffs({-1, 1}));
    CHECK(stratum_class(2) == LPolynomial(1));
    CHECK_THROWS_AS(stratum_class(3), std::invalid_argument);
}

TEST_CASE("orbit contributions")
{
    CellOrbit face("c", 2, 64, LatticePolytope::point());
    CHECK(orbit_contribution(face) == 64 * UBasisSeries::u_power(1));

    CellOrbit edge("b1", 1, 12, LatticePolytope::segment({0}, {3}));
    CHECK(orbit_contribution(edge) ==
          12 * (3 * UBasisSeries::u_power(2) + 2 * UBasisSeries::u_power(1)));

    CellOrbit vertex("a3", 0, 6,
                     LatticePolytope::polygon({{0, 0}, {-1, 0}, {-1, 3}, {0, 4}, {1, 4}, {1, 1}}));
    CHECK(orbit_contribution(vertex) ==
          6 * (3 * UBasisSeries::u_power(1) + 16 * UBasisSeries::u_power(2) +
               14 * UBasisSeries::u_power(3)));
}

TEST_CASE("zeta of the built-in datasets")
{
    auto q = zeta(builtin_complex("quartic"));
    CHECK(q.sv.valid);
    CHECK(q.sv.t == 280);
    CHECK(render_closed_form(q.series) ==
          "140*(L-1)^2*T*(1+T)/(1-T)^3 + (1+10*L+L^2)*2*T/(1-T)");
    CHECK(q.volume == LPolynomial::from_coeffs({2, 20, 2}));

    auto m = zeta(builtin_complex("quartic-mirror"));
    CHECK(m.sv.valid);
    CHECK(m.sv.t == 64);
    CHECK(render_closed_form(m.series) ==
          "32*(L-1)^2*T*(1+T)/(1-T)^3 + (1+10*L+L^2)*2*T/(1-T)");
    CHECK(m.volume == LPolynomial::from_coeffs({2, 20, 2}));
}

TEST_CASE("zeta of the tetrahedron toy")
{
    auto z = zeta(tetrahedron_toy());
    CHECK(z.sv.valid);
    CHECK(z.sv.t == 4);
    CHECK(z.series.coeff(3) == 4 * lm1sq());
    CHECK(z.volume == LPolynomial::from_coeffs({2, 20, 2}));
}

TEST_CASE("zeta with m != 24 returns the series with an invalid canonical form")
{
    auto z = zeta(tetrahedron_toy(0));
    CHECK_FALSE(z.sv.valid);
    CHECK(z.series.coeff(3) == 4 * lm1sq());
}

TEST_CASE("zeta refuses a complex that fails validation")
{
    auto c = builtin_complex("quartic");
    c.orbits[1].multiplicity = 11;
    CHECK_FALSE(validate(c).ok);
    CHECK_THROWS_AS(zeta(c), std::invalid_argument);
}

TEST_CASE("the lattice-count oracle")
{
    CHECK(l_series_oracle(LatticePolytope::polygon({{0, 0}, {1, 0}, {0, 1}}), 5) ==
          std::vector<Int>{0, 0, 1, 3, 6});
    CHECK(l_series_oracle(LatticePolytope::segment({0}, {3}), 4) ==
          std::vector<Int>{2, 5, 8, 11});
    CHECK(l_series_oracle(LatticePolytope::point(), 3) == std::vector<Int>{1, 1, 1});
    CHECK_THROWS_AS(l_series_oracle(LatticePolytope::point(), 51), std::invalid_argument);
}

TEST_CASE("profile generating function equals the enumeration oracle")
{
    auto check_match = [](const LatticePolytope& p) {
        auto closed = expand(profile_series(p), 8);
        auto oracle = l_series_oracle(p, 8);
        for (int n = 0; n < 8; ++n)
            CHECK(closed[static_cast<size_t>(n)] == LPolynomial(oracle[static_cast<size_t>(n)]));
    };

    for (const auto& o : builtin_complex("quartic").orbits)
        check_match(o.dual);
    for (const auto& o : builtin_complex("quartic-mirror").orbits)
        check_match(o.dual);

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 30; ++i)
        check_match(random_convex_polygon(rng, 6));
}

TEST_CASE("t invariant")
{
    CHECK(t_invariant(builtin_complex("quartic")) == 280);
    CHECK(t_invariant(builtin_complex("quartic-mirror")) == 64);
    CHECK(t_invariant(tetrahedron_toy()) == 4);
}

TEST_CASE("canonical form holds for any valid complex with m = 24")
{
    // randomized sphere data: vertex orbits with random duals, closed up by
    // solving the triangulated-sphere identities for edge and face counts
    std::mt19937_64 rng(77);
    int built = 0;
    while (built < 10) {
        DegenerationComplex c;
        c.name = "random-sphere";
        c.odp_count = 24;
        Int f = 0, e = 0, v = 0;
        int orbits = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < orbits; ++i) {
            auto dual = random_convex_polygon(rng, 4);
            Int mult = 1 + static_cast<Int>(rng() % 5);
            c.orbits.emplace_back("v" + std::to_string(i), 0, mult, dual);
            SimplexProfile s = simplex_profile(dual);
            f += mult * s.c2;
            e += mult * s.c1;
            v += mult * s.c0;
        }
        if (f % 2 != 0)
            continue;
        Int need_edges = 3 * f / 2 - e;
        Int need_faces = f / 2 + 2 - v;
        if (need_edges < 1 || need_faces < 1)
            continue;
        c.orbits.emplace_back("e", 1, need_edges, LatticePolytope::segment({0}, {1}));
        c.orbits.emplace_back("f", 2, need_faces, LatticePolytope::point());
        REQUIRE(validate(c).ok);

        auto z = zeta(c);
        CHECK(z.sv.valid);
        CHECK(z.sv.t == t_invariant(c));
        CHECK(z.volume == LPolynomial::from_coeffs({2, 20, 2}));
        ++built;
    }
}

TEST_CASE("expanded coefficients are nonnegative at integer L >= 2")
{
    for (const char* name : {"quartic", "quartic-mirror"}) {
        auto z = zeta(builtin_complex(name));
        for (const auto& coeff : expand(z.series, 12))
            for (Int l : {2, 3, 7})
                CHECK(coeff.evaluate(l) >= 0);
    }
}

TEST_CASE("euler specialization of both zetas is constantly 24")
{
    for (const char* name : {"quartic", "quartic-mirror"})
        for (Int v : euler_specialize(zeta(builtin_complex(name)).series, 12))
            CHECK(v == 24);
}
