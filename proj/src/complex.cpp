#include "k3zeta/complex.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace k3zeta {

using ordered_json = nlohmann::ordered_json;

CellOrbit::CellOrbit(std::string label_, int dim_, Int multiplicity_, LatticePolytope dual_)
    : label(std::move(label_)), dim(dim_), multiplicity(multiplicity_), dual(std::move(dual_))
{
    if (dim < 0 || dim > 2)
        throw std::invalid_argument("cell dimension must be 0, 1 or 2");
    if (multiplicity < 1)
        throw std::invalid_argument("orbit multiplicity must be >= 1");
    if (dual.dim() != 2 - dim)
        throw std::invalid_argument("orbit '" + label + "': dual dimension must be " +
                                    std::to_string(2 - dim));
}

ValidationReport validate(const DegenerationComplex& c)
{
    ValidationReport r;
    for (const auto& o : c.orbits) {
        SimplexProfile s = simplex_profile(o.dual);
        r.F = checked_add(r.F, checked_mul(o.multiplicity, s.c2));
        r.E = checked_add(r.E, checked_mul(o.multiplicity, s.c1));
        r.V = checked_add(r.V, checked_mul(o.multiplicity, s.c0));
    }
    r.ok = true;
    if (checked_add(checked_sub(r.V, r.E), r.F) != 2) {
        r.ok = false;
        std::ostringstream os;
        os << "Euler characteristic V - E + F = " << r.V - r.E + r.F << ", expected 2";
        r.messages.push_back(os.str());
    }
    if (checked_mul(2, r.E) != checked_mul(3, r.F)) {
        r.ok = false;
        std::ostringstream os;
        os << "2E = " << 2 * r.E << " differs from 3F = " << 3 * r.F
           << " (dual complex is not a triangulated surface)";
        r.messages.push_back(os.str());
    }
    return r;
}

DegenerationComplex builtin_complex(const std::string& name)
{
    using P = LatticePoint;
    if (name == "quartic") {
        DegenerationComplex c;
        c.name = "quartic";
        c.odp_count = 24;
        c.notes = "vertices of the facet subdivision of the quartic Newton polytope, "
                  "with Newton-polytope duals";
        c.orbits = {
            {"a1", 0, 4, LatticePolytope::polygon({P{0, 0}, P{-1, 0}, P{0, -1}})},
            {"a2", 0, 12,
             LatticePolytope::polygon(
                 {P{0, 0}, P{-1, 1}, P{-1, 2}, P{0, 3}, P{1, 3}, P{1, 0}})},
            {"a3", 0, 6,
             LatticePolytope::polygon(
                 {P{0, 0}, P{-1, 0}, P{-1, 3}, P{0, 4}, P{1, 4}, P{1, 1}})},
            {"a4", 0, 12,
             LatticePolytope::polygon(
                 {P{0, 0}, P{-1, 0}, P{-1, 1}, P{0, 2}, P{1, 2}, P{1, 1}})},
            {"b1", 1, 12, LatticePolytope::segment(P{0}, P{3})},
            {"b2", 1, 84, LatticePolytope::segment(P{0}, P{1})},
            {"c", 2, 64, LatticePolytope::point()},
        };
        return c;
    }
    if (name == "quartic-mirror") {
        DegenerationComplex c;
        c.name = "quartic-mirror";
        c.odp_count = 24;
        c.notes = "cells of the mirror complex; every vertex carries the fan of P^2, "
                  "dualizing to a unimodular triangle";
        c.orbits = {
            {"c_check", 0, 64, LatticePolytope::polygon({P{0, 0}, P{1, 0}, P{0, 1}})},
            {"b_check", 1, 96, LatticePolytope::segment(P{0}, P{1})},
            {"a1_check", 2, 4, LatticePolytope::point()},
            {"a2_check", 2, 12, LatticePolytope::point()},
            {"a3_check", 2, 6, LatticePolytope::point()},
            {"a4_check", 2, 12, LatticePolytope::point()},
        };
        return c;
    }
    throw std::invalid_argument("unknown dataset '" + name +
                                "' (expected \"quartic\" or \"quartic-mirror\")");
}

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what)
{
    throw std::invalid_argument("schema violation at " + path + ": " + what);
}

Int require_int(const ordered_json& j, const std::string& path)
{
    if (!j.is_number_integer())
        schema_fail(path, "expected an integer");
    return j.get<Int>();
}

std::string require_string(const ordered_json& j, const std::string& path)
{
    if (!j.is_string())
        schema_fail(path, "expected a string");
    return j.get<std::string>();
}

LatticePolytope parse_dual(const ordered_json& j, const std::string& path)
{
    if (!j.is_object())
        schema_fail(path, "expected an object");
    if (!j.contains("dim") || !j.contains("vertices"))
        schema_fail(path, "expected keys \"dim\" and \"vertices\"");
    Int dim = require_int(j.at("dim"), path + "/dim");
    const auto& verts = j.at("vertices");
    if (!verts.is_array())
        schema_fail(path + "/vertices", "expected an array");

    std::vector<LatticePoint> pts;
    for (size_t i = 0; i < verts.size(); ++i) {
        std::string vp = path + "/vertices/" + std::to_string(i);
        if (!verts[i].is_array())
            schema_fail(vp, "expected an array of integers");
        LatticePoint p;
        for (size_t k = 0; k < verts[i].size(); ++k)
            p.coords.push_back(require_int(verts[i][k], vp + "/" + std::to_string(k)));
        pts.push_back(std::move(p));
    }

    try {
        if (dim == 1) {
            if (pts.size() != 2)
                schema_fail(path, "a dim-1 dual needs exactly 2 vertices");
            return LatticePolytope::segment(pts[0], pts[1]);
        }
        if (dim == 2)
            return LatticePolytope::polygon(std::move(pts));
    } catch (const std::invalid_argument& e) {
        schema_fail(path, e.what());
    }
    schema_fail(path + "/dim", "expected 1 or 2");
}

} // namespace

DegenerationComplex load_complex(std::istream& in)
{
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }

    if (!j.is_object())
        schema_fail("/", "expected an object");
    for (const char* key : {"name", "dimension", "odp_count", "orbits"})
        if (!j.contains(key))
            schema_fail("/", std::string("missing key \"") + key + "\"");

    DegenerationComplex c;
    c.name = require_string(j.at("name"), "/name");
    if (require_int(j.at("dimension"), "/dimension") != 2)
        schema_fail("/dimension", "only dimension 2 is supported");
    c.odp_count = require_int(j.at("odp_count"), "/odp_count");
    if (c.odp_count < 0)
        schema_fail("/odp_count", "must be nonnegative");
    if (j.contains("notes"))
        c.notes = require_string(j.at("notes"), "/notes");

    const auto& orbits = j.at("orbits");
    if (!orbits.is_array())
        schema_fail("/orbits", "expected an array");
    for (size_t i = 0; i < orbits.size(); ++i) {
        std::string path = "/orbits/" + std::to_string(i);
        const auto& o = orbits[i];
        if (!o.is_object())
            schema_fail(path, "expected an object");
        for (const char* key : {"label", "dim", "multiplicity"})
            if (!o.contains(key))
                schema_fail(path, std::string("missing key \"") + key + "\"");
        std::string label = require_string(o.at("label"), path + "/label");
        Int dim = require_int(o.at("dim"), path + "/dim");
        Int mult = require_int(o.at("multiplicity"), path + "/multiplicity");
        if (dim < 0 || dim > 2)
            schema_fail(path + "/dim", "expected 0, 1 or 2");
        if (dim == 2 && o.contains("dual"))
            schema_fail(path + "/dual", "dim-2 orbits must omit the dual");
        if (dim != 2 && !o.contains("dual"))
            schema_fail(path, "missing key \"dual\"");

        LatticePolytope dual = LatticePolytope::point();
        if (dim != 2)
            dual = parse_dual(o.at("dual"), path + "/dual");
        try {
            c.orbits.emplace_back(label, static_cast<int>(dim), mult, std::move(dual));
        } catch (const std::invalid_argument& e) {
            schema_fail(path, e.what());
        }
    }
    return c;
}

DegenerationComplex load_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    return load_complex(in);
}

std::string save_complex(const DegenerationComplex& c)
{
    ordered_json j;
    j["name"] = c.name;
    j["dimension"] = 2;
    j["odp_count"] = c.odp_count;
    j["orbits"] = ordered_json::array();
    for (const auto& o : c.orbits) {
        ordered_json jo;
        jo["label"] = o.label;
        jo["dim"] = o.dim;
        jo["multiplicity"] = o.multiplicity;
        if (o.dim != 2) {
            ordered_json dual;
            dual["dim"] = o.dual.dim();
            dual["vertices"] = ordered_json::array();
            for (const auto& v : o.dual.vertices())
                dual["vertices"].push_back(v.coords);
            jo["dual"] = std::move(dual);
        }
        j["orbits"].push_back(std::move(jo));
    }
    if (!c.notes.empty())
        j["notes"] = c.notes;
    return j.dump(2) + "\n";
}

void save_complex_file(const DegenerationComplex& c, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << save_complex(c);
}

FacetTable quartic_facet_table()
{
    FacetTable t;
    auto corner = [](Int x, Int y) {
        return x == 0 ? (y == 0 || y == 4) : (x == 4 && y == 0);
    };
    for (Int x = 0; x <= 4; ++x)
        for (Int y = 0; x + y <= 4; ++y) {
            t.points.push_back(LatticePoint{x, y});
            bool boundary = x == 0 || y == 0 || x + y == 4;
            if (corner(x, y))
                t.heights.push_back(10);
            else if (!boundary)
                t.heights.push_back(5);
            else if (x == 2 || y == 2 || (x + y == 4 && x == 2))
                t.heights.push_back(6); // edge midpoint
            else
                t.heights.push_back(7); // edge point next to a corner
        }
    return t;
}

FanPL quartic_interior_vertex_fan()
{
    FacetTable t = quartic_facet_table();
    auto height = [&](const LatticePoint& p) {
        for (size_t i = 0; i < t.points.size(); ++i)
            if (t.points[i] == p)
                return t.heights[i];
        throw std::logic_error("point outside the facet table");
    };

    // star of the interior vertex (1,1) in the 16-triangle subdivision
    const LatticePoint v{1, 1};
    std::vector<LatticePoint> rays{
        {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    std::vector<Int> values;
    for (const auto& r : rays)
        values.push_back(checked_sub(height(v), height(v + r)));
    return FanPL::from_ray_values(std::move(rays), values);
}

} // namespace k3zeta
