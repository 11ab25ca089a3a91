// shared test helpers: independent brute-force counters and the power-series
// long-division oracle
#ifndef K3ZETA_TESTS_SUPPORT_HPP
#define K3ZETA_TESTS_SUPPORT_HPP

#include <vector>

#include "k3zeta/checked.hpp"
#include "k3zeta/lattice.hpp"
#include "k3zeta/triangulation.hpp"

namespace k3zeta::testsupport {

// interior lattice points of the n-th dilate of the standard k-simplex,
// counted by direct loops (independent of the library's enumeration)
inline Int interior_points_of_dilated_simplex(int k, Int n)
{
    if (k == 0)
        return 1;
    if (k == 1) {
        Int c = 0;
        for (Int x = 1; x < n; ++x)
            ++c;
        return c;
    }
    Int c = 0;
    for (Int x = 1; x < n; ++x)
        for (Int y = 1; y < n; ++y)
            if (x + y < n)
                ++c;
    return c;
}

// T^1..T^N coefficients of (numer / denom) for integer polynomial
// coefficients (constant term of denom must be 1 or -1)
inline std::vector<Int> series_divide(std::vector<Int> numer, std::vector<Int> denom, int N)
{
    std::vector<Int> out;
    numer.resize(static_cast<size_t>(N) + 1, 0);
    denom.resize(static_cast<size_t>(N) + 1, 0);
    std::vector<Int> q(static_cast<size_t>(N) + 1, 0);
    for (size_t n = 0; n <= static_cast<size_t>(N); ++n) {
        Int acc = numer[n];
        for (size_t i = 1; i <= n; ++i)
            acc = checked_sub(acc, checked_mul(denom[i], q[n - i]));
        q[n] = acc / denom[0];
    }
    for (int n = 1; n <= N; ++n)
        out.push_back(q[static_cast<size_t>(n)]);
    return out;
}

// structural verification of a triangulation of P: unimodular triangles,
// areas summing to the polygon's, every lattice point used, interior edges
// shared by exactly two triangles and boundary edges by one
inline void verify_triangulation(const LatticePolytope& p, const Triangulation& t)
{
    Int area_sum = 0;
    std::vector<int> edge_use(t.edges.size(), 0);
    auto edge_index = [&](int a, int b) {
        std::array<int, 2> key{std::min(a, b), std::max(a, b)};
        for (size_t i = 0; i < t.edges.size(); ++i)
            if (t.edges[i] == key)
                return static_cast<int>(i);
        return -1;
    };
    std::vector<bool> used(t.points.size(), false);
    for (const auto& tri : t.triangles) {
        const auto& a = t.points[static_cast<size_t>(tri[0])];
        const auto& b = t.points[static_cast<size_t>(tri[1])];
        const auto& c = t.points[static_cast<size_t>(tri[2])];
        Int det = checked_abs(cross(a, b, c));
        if (det != 1)
            throw std::logic_error("non-unimodular triangle");
        area_sum = checked_add(area_sum, det);
        for (int k = 0; k < 3; ++k) {
            used[static_cast<size_t>(tri[static_cast<size_t>(k)])] = true;
            int ix = edge_index(tri[static_cast<size_t>(k)], tri[static_cast<size_t>((k + 1) % 3)]);
            if (ix < 0)
                throw std::logic_error("triangle edge missing from edge list");
            ++edge_use[static_cast<size_t>(ix)];
        }
    }
    if (area_sum != normalized_area(p))
        throw std::logic_error("triangle areas do not sum to the polygon area");
    for (bool u : used)
        if (!u)
            throw std::logic_error("unused lattice point");
    for (size_t i = 0; i < t.edges.size(); ++i)
        if (edge_use[i] != 1 && edge_use[i] != 2)
            throw std::logic_error("edge not shared by one or two triangles");
}

} // namespace k3zeta::testsupport

#endif
