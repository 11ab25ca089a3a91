#include <doctest.h>

#include "k3zeta/lattice.hpp"
#include "k3zeta/random_polygon.hpp"

using namespace k3zeta;

namespace {

LatticePolytope unit_triangle()
{
    return LatticePolytope::polygon({{0, 0}, {1, 0}, {0, 1}});
}

LatticePolytope a2_hexagon()
{
    return LatticePolytope::polygon({{0, 0}, {-1, 1}, {-1, 2}, {0, 3}, {1, 3}, {1, 0}});
}

LatticePolytope a3_hexagon()
{
    return LatticePolytope::polygon({{0, 0}, {-1, 0}, {-1, 3}, {0, 4}, {1, 4}, {1, 1}});
}

LatticePolytope a4_hexagon()
{
    return LatticePolytope::polygon({{0, 0}, {-1, 0}, {-1, 1}, {0, 2}, {1, 2}, {1, 1}});
}

} // namespace

TEST_CASE("content is the gcd of the absolute entries")
{
    CHECK(content(LatticePoint{4, 4}) == 4);
    CHECK(content(LatticePoint{0, 0}) == 0);
    CHECK(content(LatticePoint{6, 10}) == 2);
    CHECK(content(LatticePoint{-6, 10}) == 2);
    CHECK(content(LatticePoint{3}) == 3);
}

TEST_CASE("normalized area by shoelace")
{
    CHECK(normalized_area(unit_triangle()) == 1);
    CHECK(normalized_area(a3_hexagon()) == 14);
    CHECK(normalized_area(a2_hexagon()) == 10);
    CHECK(normalized_area(a4_hexagon()) == 6);
    CHECK_THROWS_AS(normalized_area(LatticePolytope::point()), std::invalid_argument);
    CHECK_THROWS_AS(normalized_area(LatticePolytope::segment({0}, {3})), std::invalid_argument);
}

TEST_CASE("boundary lattice counts")
{
    CHECK(boundary_lattice_count(unit_triangle()) == 3);
    CHECK(boundary_lattice_count(a3_hexagon()) == 10); // 1+3+1+1+3+1
    CHECK(boundary_lattice_count(a4_hexagon()) == 6);
    CHECK(boundary_lattice_count(a2_hexagon()) == 8);
}

TEST_CASE("interior lattice counts via Pick")
{
    CHECK(interior_lattice_count(unit_triangle()) == 0);
    CHECK(interior_lattice_count(a3_hexagon()) == 3);
    CHECK(interior_lattice_count(a4_hexagon()) == 1);
    CHECK(interior_lattice_count(a2_hexagon()) == 2);
}

TEST_CASE("enumerate_dilate")
{
    SUBCASE("interior of 3 * unit triangle is a single point")
    {
        auto pts = enumerate_dilate(unit_triangle(), 3, true);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == LatticePoint{1, 1});
    }
    SUBCASE("interior of the doubled length-3 segment")
    {
        auto pts = enumerate_dilate(LatticePolytope::segment({0}, {3}), 2, true);
        CHECK(pts.size() == 5); // n*l - 1
    }
    SUBCASE("unimodular triangle has no interior points")
    {
        CHECK(enumerate_dilate(unit_triangle(), 1, true).empty());
    }
    SUBCASE("the dim-0 dilate is a single point equal to its own interior")
    {
        CHECK(enumerate_dilate(LatticePolytope::point(), 7, true).size() == 1);
        CHECK(enumerate_dilate(LatticePolytope::point(), 7, false).size() == 1);
    }
    SUBCASE("closed count matches Pick data")
    {
        // |P ∩ Z^2| = I + B
        CHECK(lattice_points(a3_hexagon()).size() == 13);
        CHECK(lattice_points(a4_hexagon()).size() == 7);
    }
}

TEST_CASE("Pick consistency on the four builtin polygons and random ones")
{
    auto check_pick = [](const LatticePolytope& p) {
        Int f = normalized_area(p);
        Int b = boundary_lattice_count(p);
        Int i = interior_lattice_count(p);
        CHECK(f == 2 * i + b - 2);
        // enumeration agreement
        CHECK(static_cast<Int>(enumerate_dilate(p, 1, true).size()) == i);
        CHECK(static_cast<Int>(lattice_points(p).size()) == i + b);
    };
    check_pick(LatticePolytope::polygon({{0, 0}, {-1, 0}, {0, -1}}));
    check_pick(a2_hexagon());
    check_pick(a3_hexagon());
    check_pick(a4_hexagon());

    std::mt19937_64 rng(404);
    for (int i = 0; i < 100; ++i)
        check_pick(random_convex_polygon(rng, 9));
}

TEST_CASE("boundary cycle walks every boundary lattice point once")
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 20; ++i) {
        auto p = random_convex_polygon(rng, 8);
        auto cycle = boundary_cycle(p);
        CHECK(static_cast<Int>(cycle.size()) == boundary_lattice_count(p));
        CHECK(cycle.front() == p.vertices().front());
        for (size_t k = 0; k < cycle.size(); ++k) {
            // consecutive cycle points are at lattice distance one
            CHECK(content(cycle[(k + 1) % cycle.size()] - cycle[k]) == 1);
        }
    }
}

TEST_CASE("vertex order is normalized, never a negative area")
{
    auto ccw = unit_triangle();
    auto cw = LatticePolytope::polygon({{0, 0}, {0, 1}, {1, 0}});
    CHECK(ccw == cw);
    CHECK(normalized_area(cw) == 1);

    // canonical start: lex-min vertex first
    CHECK(a4_hexagon().vertices().front() == LatticePoint{-1, 0});
}

TEST_CASE("degenerate polygons are rejected at construction")
{
    CHECK_THROWS_AS(LatticePolytope::polygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LatticePolytope::polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePolytope::polygon({{0, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LatticePolytope::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePolytope::segment({2}, {2}), std::invalid_argument);
    // non-convex quadrilateral
    CHECK_THROWS_AS(LatticePolytope::polygon({{0, 0}, {3, 0}, {1, 1}, {0, 3}}),
                    std::invalid_argument);
}

TEST_CASE("overflow is a hard error, not a wrapped value")
{
    Int big = Int{1} << 62;
    CHECK_THROWS_AS(
        [&] {
            auto p = LatticePolytope::polygon({{0, 0}, {big, 0}, {0, big}});
            return normalized_area(p);
        }(),
        std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
    CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
}
