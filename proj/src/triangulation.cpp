#include "k3zeta/triangulation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace k3zeta {

namespace {

// CCW boundary cycle of conv(pts) keeping collinear points on the edges
std::vector<LatticePoint> hull_cycle_with_collinear(const std::vector<LatticePoint>& pts)
{
    auto hull = convex_hull(pts);
    std::vector<LatticePoint> cycle;
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        std::vector<LatticePoint> on_edge;
        for (const auto& q : pts)
            if (q != b && cross(a, b, q) == 0) {
                // between a and b (inclusive of a)
                Int dx = b[0] - a[0], dy = b[1] - a[1];
                Int tx = q[0] - a[0], ty = q[1] - a[1];
                Int dot = checked_add(checked_mul(tx, dx), checked_mul(ty, dy));
                Int len2 = checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
                if (dot >= 0 && dot < len2)
                    on_edge.push_back(q);
            }
        std::sort(on_edge.begin(), on_edge.end(),
                  [&](const LatticePoint& p, const LatticePoint& q) {
                      Int dp = checked_add(checked_mul(p[0] - a[0], b[0] - a[0]),
                                           checked_mul(p[1] - a[1], b[1] - a[1]));
                      Int dq = checked_add(checked_mul(q[0] - a[0], b[0] - a[0]),
                                           checked_mul(q[1] - a[1], b[1] - a[1]));
                      return dp < dq;
                  });
        cycle.insert(cycle.end(), on_edge.begin(), on_edge.end());
    }
    return cycle;
}

// incremental placing: each point is strictly outside the hull of its
// predecessors (it is lex-extreme among them), so coning it over the
// strictly visible boundary segments yields lattice-point-free triangles
// (empty lattice triangles are exactly the unimodular ones)
std::vector<std::array<LatticePoint, 3>> place_points(std::vector<LatticePoint> pts)
{
    std::vector<std::array<LatticePoint, 3>> out;
    std::vector<LatticePoint> prefix;
    bool flat = true; // prefix still collinear
    for (const auto& q : pts) {
        if (prefix.size() >= 2) {
            if (flat && cross(prefix[0], prefix[1], q) == 0) {
                prefix.push_back(q); // chain keeps growing along the line
                continue;
            }
            if (flat) {
                // the chain is ordered along its line; q sees every segment
                for (size_t i = 0; i + 1 < prefix.size(); ++i)
                    out.push_back({prefix[i], prefix[i + 1], q});
                flat = false;
            } else {
                auto cycle = hull_cycle_with_collinear(prefix);
                for (size_t i = 0; i < cycle.size(); ++i) {
                    const auto& a = cycle[i];
                    const auto& b = cycle[(i + 1) % cycle.size()];
                    if (cross(a, b, q) < 0)
                        out.push_back({a, b, q});
                }
            }
        }
        prefix.push_back(q);
    }
    return out;
}

std::vector<std::array<int, 2>> derive_edges(const std::vector<std::array<int, 3>>& tris)
{
    std::set<std::array<int, 2>> es;
    for (const auto& t : tris) {
        for (int k = 0; k < 3; ++k) {
            int a = t[static_cast<size_t>(k)], b = t[static_cast<size_t>((k + 1) % 3)];
            es.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {es.begin(), es.end()};
}

} // namespace

Triangulation placing_triangulation(const LatticePolytope& p, PlacingOrder order)
{
    Triangulation t;
    if (p.dim() == 0) {
        t.points = {LatticePoint{}};
        return t;
    }
    t.points = lattice_points(p);
    if (p.dim() == 1) {
        for (int i = 0; i + 1 < static_cast<int>(t.points.size()); ++i)
            t.edges.push_back({i, i + 1});
        return t;
    }

    std::map<LatticePoint, int> index;
    for (size_t i = 0; i < t.points.size(); ++i)
        index[t.points[i]] = static_cast<int>(i);

    std::vector<LatticePoint> insertion = t.points;
    if (order == PlacingOrder::Descending)
        std::reverse(insertion.begin(), insertion.end());
    auto tris = place_points(std::move(insertion));

    for (const auto& tri : tris) {
        assert(checked_abs(cross(tri[0], tri[1], tri[2])) == 1);
        std::array<int, 3> ix{index.at(tri[0]), index.at(tri[1]), index.at(tri[2])};
        std::sort(ix.begin(), ix.end());
        t.triangles.push_back(ix);
    }
    std::sort(t.triangles.begin(), t.triangles.end());
    t.edges = derive_edges(t.triangles);
    return t;
}

Triangulation unimodular_triangulate(const LatticePolytope& p)
{
    if (p.dim() > 2)
        throw std::invalid_argument("triangulation supports dim <= 2 only");
    return placing_triangulation(p, PlacingOrder::Ascending);
}

namespace {

bool point_on_boundary(const LatticePolytope& p, const LatticePoint& q)
{
    const auto& v = p.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        if (cross(a, b, q) != 0)
            continue;
        Int dx = b[0] - a[0], dy = b[1] - a[1];
        Int dot = checked_add(checked_mul(q[0] - a[0], dx), checked_mul(q[1] - a[1], dy));
        Int len2 = checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
        if (dot >= 0 && dot <= len2)
            return true;
    }
    return false;
}

// an edge lies in the boundary iff both endpoints sit on one polygon edge
bool edge_in_boundary(const LatticePolytope& p, const LatticePoint& a, const LatticePoint& b)
{
    const auto& v = p.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& s = v[i];
        const auto& t = v[(i + 1) % v.size()];
        if (cross(s, t, a) != 0 || cross(s, t, b) != 0)
            continue;
        Int dx = t[0] - s[0], dy = t[1] - s[1];
        Int len2 = checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
        Int da = checked_add(checked_mul(a[0] - s[0], dx), checked_mul(a[1] - s[1], dy));
        Int db = checked_add(checked_mul(b[0] - s[0], dx), checked_mul(b[1] - s[1], dy));
        if (da >= 0 && da <= len2 && db >= 0 && db <= len2)
            return true;
    }
    return false;
}

} // namespace

SimplexProfile profile_from_triangulation(const LatticePolytope& p, const Triangulation& t)
{
    SimplexProfile s;
    if (p.dim() == 0)
        return {1, 0, 0};
    if (p.dim() == 1) {
        Int l = p.lattice_length();
        return {l - 1, l, 0};
    }
    for (const auto& q : t.points)
        if (!point_on_boundary(p, q))
            s.c0 = checked_add(s.c0, 1);
    for (const auto& e : t.edges)
        if (!edge_in_boundary(p, t.points[static_cast<size_t>(e[0])],
                              t.points[static_cast<size_t>(e[1])]))
            s.c1 = checked_add(s.c1, 1);
    s.c2 = static_cast<Int>(t.triangles.size());
    return s;
}

SimplexProfile simplex_profile(const LatticePolytope& p)
{
    SimplexProfile s;
    if (p.dim() == 0) {
        s = {1, 0, 0};
    } else if (p.dim() == 1) {
        Int l = p.lattice_length();
        s = {l - 1, l, 0};
    } else {
        Int f = normalized_area(p);
        Int b = boundary_lattice_count(p);
        Int i = interior_lattice_count(p);
        s = {i, (checked_mul(3, f) - b) / 2, f};
    }
#ifndef NDEBUG
    assert(s == profile_from_triangulation(p, unimodular_triangulate(p)));
#endif
    return s;
}

Subdivision regular_subdivision(const std::vector<LatticePoint>& points,
                                const std::vector<Int>& heights)
{
    size_t n = points.size();
    if (heights.size() != n)
        throw std::invalid_argument("heights and points differ in length");
    if (n < 3)
        throw std::invalid_argument("need at least 3 points");
    for (const auto& p : points)
        if (p.rank() != 2)
            throw std::invalid_argument("subdivision points must have rank 2");
    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate points");
    }
    bool spanning = false;
    for (size_t i = 0; i < n && !spanning; ++i)
        for (size_t j = i + 1; j < n && !spanning; ++j)
            for (size_t k = j + 1; k < n && !spanning; ++k)
                if (cross(points[i], points[j], points[k]) != 0)
                    spanning = true;
    if (!spanning)
        throw std::invalid_argument("points do not affinely span the plane");

    auto lift = [&](size_t i) {
        return std::array<Int, 3>{points[i][0], points[i][1], heights[i]};
    };

    std::set<std::vector<int>> seen;
    Subdivision result;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                if (cross(points[i], points[j], points[k]) == 0)
                    continue;
                auto a = lift(i), b = lift(j), c = lift(k);
                std::array<Int, 3> u{checked_sub(b[0], a[0]), checked_sub(b[1], a[1]),
                                     checked_sub(b[2], a[2])};
                std::array<Int, 3> v{checked_sub(c[0], a[0]), checked_sub(c[1], a[1]),
                                     checked_sub(c[2], a[2])};
                std::array<Int, 3> nrm{
                    checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1])),
                    checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2])),
                    checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]))};
                if (nrm[2] < 0)
                    for (auto& x : nrm)
                        x = checked_neg(x);

                std::vector<int> cell;
                bool lower = true;
                for (size_t m = 0; m < n && lower; ++m) {
                    auto pm = lift(m);
                    Int d = 0;
                    d = checked_add(d, checked_mul(nrm[0], checked_sub(pm[0], a[0])));
                    d = checked_add(d, checked_mul(nrm[1], checked_sub(pm[1], a[1])));
                    d = checked_add(d, checked_mul(nrm[2], checked_sub(pm[2], a[2])));
                    if (d < 0)
                        lower = false;
                    else if (d == 0)
                        cell.push_back(static_cast<int>(m));
                }
                if (!lower || !seen.insert(cell).second)
                    continue;

                SubdivisionCell sc;
                sc.point_indices = cell;
                std::vector<LatticePoint> cellpts;
                for (int ix : cell)
                    cellpts.push_back(points[static_cast<size_t>(ix)]);
                auto hull = convex_hull(cellpts);
                for (const auto& h : hull)
                    for (int ix : cell)
                        if (points[static_cast<size_t>(ix)] == h) {
                            sc.hull.push_back(ix);
                            break;
                        }
                sc.unimodular_triangle =
                    cell.size() == 3 &&
                    checked_abs(cross(cellpts[0], cellpts[1], cellpts[2])) == 1;
                result.cells.push_back(std::move(sc));
            }

    std::sort(result.cells.begin(), result.cells.end(),
              [](const SubdivisionCell& a, const SubdivisionCell& b) {
                  return a.point_indices < b.point_indices;
              });

    std::vector<bool> used(n, false);
    result.all_unimodular = true;
    for (const auto& c : result.cells) {
        if (!c.unimodular_triangle)
            result.all_unimodular = false;
        for (int ix : c.point_indices)
            used[static_cast<size_t>(ix)] = true;
    }
    for (size_t i = 0; i < n; ++i)
        if (!used[i])
            result.unused_points.push_back(static_cast<int>(i));
    return result;
}

namespace {

Int dot2(const std::array<Int, 2>& l, const LatticePoint& r)
{
    return checked_add(checked_mul(l[0], r[0]), checked_mul(l[1], r[1]));
}

Int ray_cross(const LatticePoint& a, const LatticePoint& b)
{
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

} // namespace

FanPL::FanPL(std::vector<LatticePoint> rays, std::vector<std::array<Int, 2>> linear_parts)
    : rays_(std::move(rays)), parts_(std::move(linear_parts))
{
    size_t n = rays_.size();
    if (n < 3 || parts_.size() != n)
        throw std::invalid_argument("complete fan needs >= 3 rays with one covector per cone");
    for (const auto& r : rays_) {
        if (r.rank() != 2 || content(r) != 1)
            throw std::invalid_argument("rays must be primitive rank-2 vectors");
    }
    for (size_t i = 0; i < n; ++i)
        if (ray_cross(rays_[i], rays_[(i + 1) % n]) <= 0)
            throw std::invalid_argument("rays must be in strictly counter-clockwise order");

    // single winding: the cyclic order must agree with the angular order
    auto half = [](const LatticePoint& r) { // 0 for upper half (y>0 or y==0,x>0)
        return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1;
    };
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        int ha = half(rays_[a]), hb = half(rays_[b]);
        if (ha != hb)
            return ha < hb;
        return ray_cross(rays_[a], rays_[b]) > 0;
    });
    size_t start = std::find(order.begin(), order.end(), size_t{0}) - order.begin();
    for (size_t i = 0; i < n; ++i)
        if (order[(start + i) % n] != i)
            throw std::invalid_argument("rays wind around the origin more than once");

    for (size_t i = 0; i < n; ++i) {
        const auto& shared = rays_[(i + 1) % n];
        if (dot2(parts_[i], shared) != dot2(parts_[(i + 1) % n], shared))
            throw std::invalid_argument("linear parts disagree on a shared ray");
    }

    // support-function normalization: f = min over cones, so each covector
    // must dominate the function on the neighboring cone's far ray
    convex_ = true;
    for (size_t i = 0; i < n; ++i) {
        const auto& far = rays_[(i + 2) % n];
        Int mine = dot2(parts_[i], far);
        Int actual = dot2(parts_[(i + 1) % n], far);
        if (mine < actual) {
            convex_ = false;
            std::ostringstream os;
            os << "non-convex between cones " << i << " and " << (i + 1) % n
               << " (shared ray (" << rays_[(i + 1) % n][0] << ","
               << rays_[(i + 1) % n][1] << "))";
            convexity_report_ = os.str();
            break;
        }
    }
}

FanPL FanPL::from_ray_values(std::vector<LatticePoint> rays, const std::vector<Int>& values)
{
    size_t n = rays.size();
    if (values.size() != n)
        throw std::invalid_argument("one value per ray required");
    std::vector<std::array<Int, 2>> parts(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& r = rays[i];
        const auto& s = rays[(i + 1) % n];
        Int d = ray_cross(r, s);
        if (d == 0)
            throw std::invalid_argument("degenerate cone");
        Int ax = checked_sub(checked_mul(values[i], s[1]),
                             checked_mul(values[(i + 1) % n], r[1]));
        Int ay = checked_sub(checked_mul(r[0], values[(i + 1) % n]),
                             checked_mul(s[0], values[i]));
        if (ax % d != 0 || ay % d != 0)
            throw std::invalid_argument("linear part is not integral on a cone");
        parts[i] = {ax / d, ay / d};
    }
    return FanPL(std::move(rays), std::move(parts));
}

Int FanPL::value(const LatticePoint& q) const
{
    size_t n = rays_.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& r = rays_[i];
        const auto& s = rays_[(i + 1) % n];
        // q in cone(r, s) iff both barycentric cross products are >= 0
        if (ray_cross(r, q) >= 0 && ray_cross(q, s) >= 0)
            return dot2(parts_[i], q);
    }
    throw std::logic_error("complete fan does not contain a point");
}

LatticePolytope newton_polytope_of_pl(const FanPL& f)
{
    if (!f.convex())
        throw std::invalid_argument(f.convexity_report());
    std::vector<LatticePoint> covs;
    for (const auto& l : f.linear_parts())
        covs.push_back(LatticePoint{l[0], l[1]});
    std::sort(covs.begin(), covs.end());
    covs.erase(std::unique(covs.begin(), covs.end()), covs.end());

    if (covs.size() == 1)
        return LatticePolytope::point();
    auto hull = convex_hull(covs);
    if (hull.size() <= 2) {
        // collinear covectors: the hull degenerates to a segment
        return LatticePolytope::segment(covs.front(), covs.back()).translated_to_origin();
    }
    return LatticePolytope::polygon(hull).translated_to_origin();
}

} // namespace k3zeta
