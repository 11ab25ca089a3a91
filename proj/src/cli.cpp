#include "k3zeta/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3zeta/complex.hpp"
#include "k3zeta/monodromy.hpp"
#include "k3zeta/random_polygon.hpp"
#include "k3zeta/zeta.hpp"

namespace k3zeta {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTheory = 2;
constexpr std::uint64_t kDefaultSeed = 20240808;

struct DatasetOpts {
    std::string dataset;
    std::string file;
};

void add_dataset_opts(CLI::App* cmd, DatasetOpts& opts)
{
    auto* ds = cmd->add_option("--dataset", opts.dataset,
                               "built-in dataset: quartic or quartic-mirror");
    auto* f = cmd->add_option("--file", opts.file, "dataset JSON file");
    ds->excludes(f);
}

DegenerationComplex resolve_dataset(const DatasetOpts& opts)
{
    if (!opts.file.empty())
        return load_complex_file(opts.file);
    if (!opts.dataset.empty())
        return builtin_complex(opts.dataset);
    throw std::invalid_argument("no dataset given (use --dataset or --file)");
}

int default_order(std::ostream& err)
{
    const char* env = std::getenv("MZT_ORDER");
    if (!env)
        return 12;
    try {
        size_t pos = 0;
        int n = std::stoi(env, &pos);
        if (pos != std::string(env).size() || n < 1 || n > 64)
            throw std::invalid_argument("out of range");
        return n;
    } catch (const std::exception&) {
        err << "error: MZT_ORDER must be an integer in [1, 64]\n";
        return -1;
    }
}

std::string point_str(const LatticePoint& p)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.coords.size(); ++i) {
        if (i)
            os << ",";
        os << p.coords[i];
    }
    os << ")";
    return os.str();
}

LatticePolytope named_polygon(const std::string& name)
{
    if (name == "unit")
        return LatticePolytope::polygon({{0, 0}, {1, 0}, {0, 1}});
    for (const auto& o : builtin_complex("quartic").orbits)
        if (o.label == name && o.dim == 0)
            return o.dual;
    throw std::invalid_argument("unknown polygon '" + name +
                                "' (expected a1, a2, a3, a4 or unit)");
}

LatticePolytope parse_inline_polygon(const std::string& text)
{
    std::vector<LatticePoint> pts;
    std::string cleaned;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            cleaned.push_back(ch);
    size_t pos = 0;
    while (pos < cleaned.size()) {
        if (cleaned[pos] == ',' || cleaned[pos] == ';') {
            ++pos;
            continue;
        }
        if (cleaned[pos] != '(')
            throw std::invalid_argument("expected '(' in vertex list");
        size_t close = cleaned.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced '(' in vertex list");
        std::string body = cleaned.substr(pos + 1, close - pos - 1);
        std::istringstream is(body);
        LatticePoint p;
        std::string tok;
        while (std::getline(is, tok, ','))
            p.coords.push_back(std::stoll(tok));
        if (p.rank() != 2)
            throw std::invalid_argument("vertices must be 2-dimensional");
        pts.push_back(std::move(p));
        pos = close + 1;
    }
    return LatticePolytope::polygon(std::move(pts));
}

int cmd_zeta(const DatasetOpts& dsopts, const std::string& format, int order,
             std::ostream& out, std::ostream& err)
{
    DegenerationComplex c = resolve_dataset(dsopts);
    ZetaResult z = zeta(c);

    if (format == "sv") {
        if (z.sv.valid)
            out << "t = " << z.sv.t << "; Z = " << render_closed_form(z.series) << "\n";
        else
            out << "Z = " << render_closed_form(z.series) << "\n";
    } else if (format == "u") {
        for (int j = 1; j <= 3; ++j)
            out << "c" << j << " = " << z.series.coeff(j).str() << "\n";
    } else if (format == "series") {
        auto coeffs = expand(z.series, order);
        for (int n = 1; n <= order; ++n)
            out << "T^" << n << ": " << coeffs[static_cast<size_t>(n - 1)].str() << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["dataset"] = c.name;
        j["sv"] = {{"valid", z.sv.valid}};
        if (z.sv.valid)
            j["sv"]["t"] = z.sv.t;
        j["u_basis"] = nlohmann::ordered_json::object();
        for (int k = 1; k <= 3; ++k)
            j["u_basis"]["c" + std::to_string(k)] = z.series.coeff(k).coeffs();
        j["volume"] = z.volume.coeffs();
        out << j.dump(2) << "\n";
    } else {
        err << "error: unknown format '" << format << "'\n";
        return kExitInput;
    }

    if (!z.sv.valid) {
        err << "zeta function is not of the canonical K3 type III shape: "
            << z.sv.residual_report << "\n";
        return kExitTheory;
    }
    return kExitOk;
}

int cmd_volume(const DatasetOpts& dsopts, std::ostream& out)
{
    ZetaResult z = zeta(resolve_dataset(dsopts));
    out << z.volume.str_ascending() << "\n";
    return kExitOk;
}

int cmd_invariants(const DatasetOpts& dsopts, bool do_mirror_check, std::ostream& out,
                   std::ostream& err)
{
    if (do_mirror_check) {
        // polarization 4H on the degree-4 surface vs the mirror's weight pair
        LefschetzPair lp = lefschetz_invariants(4, 4);
        DegenerationComplex mirror = builtin_complex("quartic-mirror");
        Int t = t_invariant(mirror);
        KDetermination k = determine_k(t, cycle_gcd({4, 4, 4}), {});
        MirrorReport r = mirror_check(lp, {t, k.value()});
        out << "t_check(quartic)=" << r.lefschetz_t << (r.t_matches ? "=" : "!=")
            << "t(mirror)" << (r.t_matches ? " OK" : " MISMATCH") << "; "
            << "k_check(quartic)=" << r.lefschetz_k << (r.k_matches ? "=" : "!=")
            << "k(mirror)" << (r.k_matches ? " OK" : " MISMATCH") << "\n";
        return r.ok() ? kExitOk : kExitTheory;
    }

    DegenerationComplex c = resolve_dataset(dsopts);
    Int t = t_invariant(c);

    // bundled cycle/cocycle evidence for the built-in datasets
    Int lower = 1;
    std::vector<Int> pairings;
    std::string evidence = "(k^2 | t filter)";
    if (c.name == "quartic") {
        Int p = transverse_pairing({1, 1}, {0, 1});
        pairings = {p};
        evidence = "(pairing evidence: " + std::to_string(p) + ")";
    } else if (c.name == "quartic-mirror") {
        lower = cycle_gcd({4, 4, 4});
        evidence = "(gcd evidence: " + std::to_string(lower) + ")";
    }

    KDetermination k = determine_k(t, lower, pairings);
    if (k.determined()) {
        out << "t=" << t << " k=" << k.value() << " " << evidence << "\n";
        return kExitOk;
    }
    out << "t=" << t << " k in {";
    bool first = true;
    for (Int cand : k.candidates) {
        if (!first)
            out << ",";
        out << cand;
        first = false;
    }
    out << "} " << evidence << "\n";
    err << "k is not determined by the available evidence\n";
    return kExitTheory;
}

int cmd_subdivide(Int uniform, bool has_uniform, Int interior_height, std::ostream& out)
{
    FacetTable t = quartic_facet_table();
    if (has_uniform)
        t.heights.assign(t.heights.size(), uniform);
    else
        for (size_t i = 0; i < t.points.size(); ++i) {
            const auto& p = t.points[i];
            if (p[0] > 0 && p[1] > 0 && p[0] + p[1] < 4)
                t.heights[i] = interior_height;
        }

    Subdivision s = regular_subdivision(t.points, t.heights);
    out << s.cells.size() << (s.cells.size() == 1 ? " cell" : " cells");
    if (s.cells.size() > 1)
        out << (s.all_unimodular ? ", all unimodular triangles"
                                 : ", non-unimodular cells present");
    out << "\n";
    if (!s.unused_points.empty()) {
        out << "points above the lower hull:";
        for (int ix : s.unused_points)
            out << " " << point_str(t.points[static_cast<size_t>(ix)]);
        out << "\n";
    }
    return kExitOk;
}

int cmd_triangulate(const std::string& name, const std::string& inline_vertices,
                    std::ostream& out)
{
    LatticePolytope p = inline_vertices.empty() ? named_polygon(name)
                                                : parse_inline_polygon(inline_vertices);
    Triangulation t = unimodular_triangulate(p);
    out << t.triangles.size() << (t.triangles.size() == 1 ? " triangle\n" : " triangles\n");
    for (const auto& tri : t.triangles)
        out << point_str(t.points[static_cast<size_t>(tri[0])]) << " "
            << point_str(t.points[static_cast<size_t>(tri[1])]) << " "
            << point_str(t.points[static_cast<size_t>(tri[2])]) << "\n";
    return kExitOk;
}

int cmd_newton(const std::string& vertex, std::ostream& out)
{
    if (vertex != "a4")
        throw std::invalid_argument(
            "only the interior facet vertex a4 has a fan chart (use --vertex a4)");
    LatticePolytope np = newton_polytope_of_pl(quartic_interior_vertex_fan());
    out << "newton polytope:";
    for (const auto& v : np.vertices())
        out << " " << point_str(v);
    out << "\n";
    for (const char* label : {"a2", "a4"}) {
        LatticePolytope dual = named_polygon(label).translated_to_origin();
        if (np == dual) {
            out << "matches " << label << " dual up to translation (normalized area "
                << normalized_area(np) << ")\n";
            return kExitOk;
        }
    }
    out << "matches neither hexagon (normalized area " << normalized_area(np) << ")\n";
    return kExitTheory;
}

int cmd_validate(const DatasetOpts& dsopts, std::ostream& out, std::ostream& err)
{
    DegenerationComplex c = resolve_dataset(dsopts);
    ValidationReport r = validate(c);
    out << "F=" << r.F << " E=" << r.E << " V=" << r.V << (r.ok ? " OK" : " FAIL") << "\n";
    for (const auto& m : r.messages)
        err << m << "\n";
    return r.ok ? kExitOk : kExitTheory;
}

int cmd_expand(const DatasetOpts& dsopts, int order, std::ostream& out)
{
    ZetaResult z = zeta(resolve_dataset(dsopts));
    for (const auto& c : expand(z.series, order))
        out << c.str() << "\n";
    return kExitOk;
}

int cmd_check(std::uint64_t seed, int count, std::ostream& out, std::ostream& err)
{
    std::mt19937_64 rng(seed);
    int matched = 0;
    for (int i = 0; i < count; ++i) {
        LatticePolytope p = random_convex_polygon(rng, 6);
        SimplexProfile s = simplex_profile(p);
        UBasisSeries z({LPolynomial(s.c0), LPolynomial(s.c1), LPolynomial(s.c2)});
        auto closed = expand(z, 8);
        auto oracle = l_series_oracle(p, 8);
        bool ok = true;
        for (int n = 0; n < 8; ++n)
            if (closed[static_cast<size_t>(n)] != LPolynomial(oracle[static_cast<size_t>(n)]))
                ok = false;
        if (ok)
            ++matched;
        else
            err << "mismatch on polygon " << i << "\n";
    }
    out << "oracle equivalence: " << matched << "/" << count
        << " polygons match to order 8 (seed " << seed << ")\n";
    return matched == count ? kExitOk : kExitTheory;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact zeta functions, volumes and monodromy invariants of "
                 "polyhedral K3 degeneration data"};
    app.name("mzt");
    app.require_subcommand(1);

    int order = default_order(err);
    if (order < 0)
        return kExitInput;

    DatasetOpts zeta_ds, volume_ds, inv_ds, validate_ds, expand_ds;
    std::string format = "sv";
    bool mirror_flag = false;
    Int uniform_height = 0, interior_height = 5;
    std::string polygon_name, inline_vertices, newton_vertex = "a4";
    std::uint64_t seed = kDefaultSeed;
    int check_count = 30;

    auto* zeta_cmd = app.add_subcommand("zeta", "zeta function of a dataset");
    add_dataset_opts(zeta_cmd, zeta_ds);
    zeta_cmd->add_option("--format", format, "sv, u, series or json");
    zeta_cmd->add_option("--order", order, "series expansion order")
        ->check(CLI::Range(1, 64));

    auto* volume_cmd = app.add_subcommand("volume", "motivic volume of a dataset");
    add_dataset_opts(volume_cmd, volume_ds);

    auto* inv_cmd = app.add_subcommand("invariants", "monodromy pair (t, k)");
    add_dataset_opts(inv_cmd, inv_ds);
    inv_cmd->add_flag("--mirror-check", mirror_flag,
                      "compare the quartic's Lefschetz pair with the mirror's (t, k)");

    auto* sub_cmd = app.add_subcommand("subdivide",
                                       "regular subdivision of the facet height table");
    auto* uni_opt = sub_cmd->add_option("--uniform", uniform_height, "set every height");
    sub_cmd->add_option("--interior-height", interior_height,
                        "height of the three interior points (default 5)");

    auto* tri_cmd = app.add_subcommand("triangulate", "unimodular triangulation of a polygon");
    tri_cmd->add_option("--polygon", polygon_name, "a1, a2, a3, a4 or unit");
    tri_cmd->add_option("--vertices", inline_vertices, "inline list: (0,0),(1,0),(0,1)");

    auto* newton_cmd = app.add_subcommand("newton",
                                          "newton polytope of the fan chart at a vertex");
    newton_cmd->add_option("--vertex", newton_vertex, "vertex type (a4)");

    auto* val_cmd = app.add_subcommand("validate", "consistency counts (F, E, V)");
    add_dataset_opts(val_cmd, validate_ds);

    auto* exp_cmd = app.add_subcommand("expand", "T-coefficients of the zeta function");
    add_dataset_opts(exp_cmd, expand_ds);
    exp_cmd->add_option("--order", order, "number of coefficients")->check(CLI::Range(1, 64));

    auto* check_cmd = app.add_subcommand("check", "randomized counting-identity check");
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_option("--count", check_count, "number of polygons")
        ->check(CLI::Range(1, 1000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (zeta_cmd->parsed())
            return cmd_zeta(zeta_ds, format, order, out, err);
        if (volume_cmd->parsed())
            return cmd_volume(volume_ds, out);
        if (inv_cmd->parsed())
            return cmd_invariants(inv_ds, mirror_flag, out, err);
        if (sub_cmd->parsed())
            return cmd_subdivide(uniform_height, uni_opt->count() > 0, interior_height, out);
        if (tri_cmd->parsed())
            return cmd_triangulate(polygon_name, inline_vertices, out);
        if (newton_cmd->parsed())
            return cmd_newton(newton_vertex, out);
        if (val_cmd->parsed())
            return cmd_validate(validate_ds, out, err);
        if (exp_cmd->parsed())
            return cmd_expand(expand_ds, order, out);
        if (check_cmd->parsed())
            return cmd_check(seed, check_count, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitTheory;
    }
    return kExitInput;
}

} // namespace k3zeta
