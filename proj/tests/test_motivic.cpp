#include <doctest.h>

#include "k3zeta/motivic.hpp"
#include "support.hpp"

using namespace k3zeta;
using namespace k3zeta::testsupport;

namespace {

LPolynomial lm1sq()
{
    return LPolynomial::from_coeffs({1, -2, 1});
}

UBasisSeries quartic_series()
{
    // 24*L*u + (L-1)^2 (142 u + 420 u^2 + 280 u^3)
    return UBasisSeries({142 * lm1sq() + LPolynomial::from_coeffs({0, 24}),
                         420 * lm1sq(), 280 * lm1sq()});
}

UBasisSeries mirror_series()
{
    return UBasisSeries({34 * lm1sq() + LPolynomial::from_coeffs({0, 24}),
                         96 * lm1sq(), 64 * lm1sq()});
}

} // namespace

TEST_CASE("u power expansion counts interior points of dilated simplices")
{
    CHECK(u_power_expand(1, 4) == std::vector<Int>{1, 1, 1, 1});
    // frozen from the independent loop counters
    CHECK(interior_points_of_dilated_simplex(2, 5) == 6);
    CHECK(u_power_expand(3, 5)[4] == 6);
    CHECK(interior_points_of_dilated_simplex(1, 4) == 3);
    CHECK(u_power_expand(2, 4)[3] == 3);

    for (int j = 1; j <= 3; ++j) {
        auto coeffs = u_power_expand(j, 10);
        for (Int n = 1; n <= 10; ++n)
            CHECK(coeffs[static_cast<size_t>(n - 1)] ==
                  interior_points_of_dilated_simplex(j - 1, n));
    }
}

TEST_CASE("series expansion")
{
    CHECK(expand(UBasisSeries::u_power(1), 3) ==
          std::vector<LPolynomial>{1, 1, 1});
    CHECK(expand(quartic_series(), 1)[0] ==
          LPolynomial::from_coeffs({142, -260, 142}));
    CHECK(expand(mirror_series(), 1)[0] == LPolynomial::from_coeffs({34, -44, 34}));
}

TEST_CASE("the u-basis identity 2u^3 + 3u^2 + u = T(1+T)/(1-T)^3")
{
    UBasisSeries lhs = 2 * UBasisSeries::u_power(3) + 3 * UBasisSeries::u_power(2) +
                       UBasisSeries::u_power(1);
    auto expanded = expand(lhs, 20);
    // independent long division: (T + T^2) / (1 - 3T + 3T^2 - T^3)
    auto oracle = series_divide({0, 1, 1}, {1, -3, 3, -1}, 20);
    for (int n = 0; n < 20; ++n)
        CHECK(expanded[static_cast<size_t>(n)] == LPolynomial(oracle[static_cast<size_t>(n)]));
}

TEST_CASE("formal limit substitutes u = -1")
{
    CHECK(formal_limit(UBasisSeries::u_power(1)) == LPolynomial(-1));
    UBasisSeries tshape = 2 * UBasisSeries::u_power(3) + 3 * UBasisSeries::u_power(2) +
                          UBasisSeries::u_power(1);
    CHECK(formal_limit(tshape).is_zero());
    CHECK(motivic_volume(quartic_series()) == LPolynomial::from_coeffs({2, 20, 2}));
    CHECK(motivic_volume(mirror_series()) == LPolynomial::from_coeffs({2, 20, 2}));

    SUBCASE("linearity: u^j maps to (-1)^j")
    {
        for (int j = 1; j <= 3; ++j)
            CHECK(formal_limit(UBasisSeries::u_power(j)) ==
                  LPolynomial(j % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("canonical form extraction")
{
    SUBCASE("the quartic series is valid with t = 280")
    {
        SVForm sv = to_sv_form(quartic_series());
        CHECK(sv.valid);
        CHECK(sv.t == 280);
    }
    SUBCASE("the mirror series is valid with t = 64")
    {
        SVForm sv = to_sv_form(mirror_series());
        CHECK(sv.valid);
        CHECK(sv.t == 64);
    }
    SUBCASE("u^3 alone fails the 3/2 ratio")
    {
        SVForm sv = to_sv_form(UBasisSeries::u_power(3));
        CHECK_FALSE(sv.valid);
        CHECK(sv.residual_report.find("u^2") != std::string::npos);
    }
    SUBCASE("u^3 coefficients outside the t*(L-1)^2 shape fail")
    {
        // consistent 3/2 ratio but not a multiple of (L-1)^2
        UBasisSeries z({LPolynomial(0), LPolynomial::from_coeffs({0, 0, 3}),
                        LPolynomial::from_coeffs({0, 0, 2})});
        SVForm sv = to_sv_form(z);
        CHECK_FALSE(sv.valid);
        CHECK(sv.residual_report.find("(L-1)^2") != std::string::npos);

        // negative multiple
        UBasisSeries zn({LPolynomial(0), -3 * lm1sq(), -2 * lm1sq()});
        sv = to_sv_form(zn);
        CHECK_FALSE(sv.valid);
        CHECK(sv.residual_report.find("nonnegative") != std::string::npos);
    }
    SUBCASE("round trip through reconstruction")
    {
        for (Int t : {0, 4, 64, 280, 1000}) {
            UBasisSeries z = sv_reconstruct(t);
            SVForm sv = to_sv_form(z);
            CHECK(sv.valid);
            CHECK(sv.t == t);
            CHECK(sv_reconstruct(sv.t) == z);
        }
        CHECK(sv_reconstruct(280) == quartic_series());
        CHECK(sv_reconstruct(64) == mirror_series());
    }
}

TEST_CASE("euler specialization at L = 1")
{
    for (Int v : euler_specialize(quartic_series(), 8))
        CHECK(v == 24);
    for (Int v : euler_specialize(mirror_series(), 8))
        CHECK(v == 24);
    for (Int v : euler_specialize(lm1sq() * UBasisSeries::u_power(1), 8))
        CHECK(v == 0);
    // every series in canonical shape specializes to the constant 24
    for (Int t : {0, 2, 6, 64, 280, 512})
        for (Int v : euler_specialize(sv_reconstruct(t), 6))
            CHECK(v == 24);
}

TEST_CASE("closed-form rendering")
{
    CHECK(render_closed_form(quartic_series()) ==
          "140*(L-1)^2*T*(1+T)/(1-T)^3 + (1+10*L+L^2)*2*T/(1-T)");
    CHECK(render_closed_form(mirror_series()) ==
          "32*(L-1)^2*T*(1+T)/(1-T)^3 + (1+10*L+L^2)*2*T/(1-T)");
    CHECK(render_closed_form(UBasisSeries::u_power(1)) == "T/(1-T)");
    CHECK(render_closed_form(UBasisSeries::u_power(2)) == "(T/(1-T))^2");
    CHECK(render_closed_form(LPolynomial::from_coeffs({0, 24}) * UBasisSeries::u_power(1)) ==
          "24*L*T/(1-T)");
}

TEST_CASE("polynomial rendering grammar")
{
    CHECK(LPolynomial::from_coeffs({2, 20, 2}).str_ascending() == "2 + 20*L + 2*L^2");
    CHECK(LPolynomial::from_coeffs({142, -260, 142}).str() == "142*L^2 - 260*L + 142");
    CHECK(LPolynomial::from_coeffs({0, 1}).str() == "L");
    CHECK(LPolynomial::from_coeffs({0, -1}).str() == "-L");
    CHECK(LPolynomial(0).str() == "0");
    CHECK(LPolynomial::from_coeffs({1, 0, -3}).str() == "-3*L^2 + 1");
}
