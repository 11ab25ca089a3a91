#include "k3zeta/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3zeta {

namespace {

void require_same_rank(const LatticePoint& a, const LatticePoint& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("lattice points of different ambient rank");
}

} // namespace

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b)
{
    require_same_rank(a, b);
    LatticePoint r = a;
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = checked_add(r.coords[i], b.coords[i]);
    return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b)
{
    require_same_rank(a, b);
    LatticePoint r = a;
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = checked_sub(r.coords[i], b.coords[i]);
    return r;
}

LatticePoint operator*(Int s, const LatticePoint& a)
{
    LatticePoint r = a;
    for (auto& c : r.coords)
        c = checked_mul(s, c);
    return r;
}

Int content(const LatticePoint& v)
{
    Int g = 0;
    for (Int c : v.coords)
        g = gcd_nonneg(g, c);
    return g;
}

Int cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    if (a.rank() != 2 || b.rank() != 2 || c.rank() != 2)
        throw std::invalid_argument("cross requires rank-2 points");
    Int ux = checked_sub(b[0], a[0]), uy = checked_sub(b[1], a[1]);
    Int vx = checked_sub(c[0], a[0]), vy = checked_sub(c[1], a[1]);
    return checked_sub(checked_mul(ux, vy), checked_mul(uy, vx));
}

LatticePolytope LatticePolytope::point()
{
    return LatticePolytope(0, {});
}

LatticePolytope LatticePolytope::segment(const LatticePoint& a, const LatticePoint& b)
{
    require_same_rank(a, b);
    if (a.rank() < 1 || a.rank() > 2)
        throw std::invalid_argument("segment endpoints must have rank 1 or 2");
    if (a == b)
        throw std::invalid_argument("segment endpoints must be distinct");
    std::vector<LatticePoint> v{a, b};
    std::sort(v.begin(), v.end());
    return LatticePolytope(1, std::move(v));
}

LatticePolytope LatticePolytope::polygon(std::vector<LatticePoint> vertices)
{
    if (vertices.size() < 3)
        throw std::invalid_argument("polygon needs at least 3 vertices");
    for (const auto& v : vertices)
        if (v.rank() != 2)
            throw std::invalid_argument("polygon vertices must have rank 2");

    // orientation: normalize to CCW, reject zero signed area
    Int twice_area = 0;
    size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % n];
        twice_area = checked_add(twice_area,
                                 checked_sub(checked_mul(a[0], b[1]),
                                             checked_mul(a[1], b[0])));
    }
    if (twice_area == 0)
        throw std::invalid_argument("polygon vertices are collinear");
    if (twice_area < 0)
        std::reverse(vertices.begin(), vertices.end());

    // rotate so the lex-min vertex comes first
    auto min_it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), min_it, vertices.end());

    // strict convexity: every consecutive triple turns left
    for (size_t i = 0; i < n; ++i) {
        Int c = cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
        if (c == 0)
            throw std::invalid_argument("three consecutive polygon vertices are collinear");
        if (c < 0)
            throw std::invalid_argument("polygon is not convex");
    }

    // all-left turns still admit multiply-wound cycles; the hull check settles it
    auto hull = convex_hull(vertices);
    if (hull != vertices)
        throw std::invalid_argument("polygon vertices are not in convex position");

    return LatticePolytope(2, std::move(vertices));
}

Int LatticePolytope::lattice_length() const
{
    if (dim_ != 1)
        throw std::invalid_argument("lattice_length requires a dim-1 polytope");
    return content(vertices_[1] - vertices_[0]);
}

LatticePolytope LatticePolytope::translated(const LatticePoint& t) const
{
    LatticePolytope r = *this;
    for (auto& v : r.vertices_)
        v = v + t;
    return r;
}

LatticePolytope LatticePolytope::translated_to_origin() const
{
    if (vertices_.empty())
        return *this;
    LatticePoint shift = *std::min_element(vertices_.begin(), vertices_.end());
    for (auto& c : shift.coords)
        c = checked_neg(c);
    return translated(shift);
}

Int normalized_area(const LatticePolytope& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("normalized_area requires a dim-2 polytope");
    const auto& v = p.vertices();
    Int s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s = checked_add(s, checked_sub(checked_mul(a[0], b[1]),
                                       checked_mul(a[1], b[0])));
    }
    return s; // positive: canonical form is CCW
}

Int boundary_lattice_count(const LatticePolytope& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("boundary_lattice_count requires a dim-2 polytope");
    const auto& v = p.vertices();
    Int b = 0;
    for (size_t i = 0; i < v.size(); ++i)
        b = checked_add(b, content(v[(i + 1) % v.size()] - v[i]));
    return b;
}

Int interior_lattice_count(const LatticePolytope& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("interior_lattice_count requires a dim-2 polytope");
    // Pick: F = 2I + B - 2
    Int f = normalized_area(p);
    Int b = boundary_lattice_count(p);
    Int twice_i = checked_add(checked_sub(f, b), 2);
    return twice_i / 2;
}

namespace {

// sign classification of q against the CCW polygon vs: +1 interior, 0 boundary, -1 outside
int polygon_side(const std::vector<LatticePoint>& vs, const LatticePoint& q)
{
    bool on_edge = false;
    for (size_t i = 0; i < vs.size(); ++i) {
        Int c = cross(vs[i], vs[(i + 1) % vs.size()], q);
        if (c < 0)
            return -1;
        if (c == 0)
            on_edge = true;
    }
    return on_edge ? 0 : 1;
}

std::vector<LatticePoint> segment_points(const LatticePoint& a, const LatticePoint& b,
                                         bool interior_only)
{
    LatticePoint d = b - a;
    Int len = content(d);
    LatticePoint step = d;
    for (auto& c : step.coords)
        c /= len;
    std::vector<LatticePoint> out;
    Int from = interior_only ? 1 : 0;
    Int to = interior_only ? len - 1 : len;
    for (Int k = from; k <= to; ++k)
        out.push_back(a + k * step);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<LatticePoint> enumerate_dilate(const LatticePolytope& p, Int n,
                                           bool interior_only)
{
    if (n < 1)
        throw std::invalid_argument("dilation factor must be >= 1");

    if (p.dim() == 0) {
        // the dilate of the point of Z^0 is itself, and is its own interior
        return {LatticePoint{}};
    }

    if (p.dim() == 1) {
        return segment_points(n * p.vertices()[0], n * p.vertices()[1], interior_only);
    }

    std::vector<LatticePoint> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices())
        vs.push_back(n * v);

    Int xmin = vs[0][0], xmax = vs[0][0], ymin = vs[0][1], ymax = vs[0][1];
    for (const auto& v : vs) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }

    std::vector<LatticePoint> out;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y) {
            LatticePoint q{x, y};
            int side = polygon_side(vs, q);
            if (side > 0 || (!interior_only && side == 0))
                out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p)
{
    return enumerate_dilate(p, 1, false);
}

std::vector<LatticePoint> boundary_cycle(const LatticePolytope& p)
{
    if (p.dim() != 2)
        throw std::invalid_argument("boundary_cycle requires a dim-2 polytope");
    const auto& v = p.vertices();
    std::vector<LatticePoint> cycle;
    for (size_t i = 0; i < v.size(); ++i) {
        LatticePoint d = v[(i + 1) % v.size()] - v[i];
        Int len = content(d);
        LatticePoint step = d;
        for (auto& c : step.coords)
            c /= len;
        for (Int k = 0; k < len; ++k)
            cycle.push_back(v[i] + k * step);
    }
    return cycle;
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    size_t n = points.size();
    if (n < 3)
        return points;

    std::vector<LatticePoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper chain
        while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace k3zeta
