#include "gromzeta/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gromzeta/errors.hpp"
#include "gromzeta/graded.hpp"
#include "gromzeta/json_io.hpp"
#include "gromzeta/knots.hpp"
#include "gromzeta/manifolds.hpp"
#include "gromzeta/symclass.hpp"

namespace gromzeta {

namespace {

using io::json;

constexpr const char* kOrderEnv = "GROMZETA_ORDER";
constexpr long kDefaultOrder = 16;

std::string single_line(std::string s) {
    for (auto& ch : s)
        if (ch == '\n' || ch == '\r')
            ch = ' ';
    return s;
}

void emit(std::ostream& out, const json& j) {
    out << j.dump() << "\n";
}

std::string file_stem(const std::string& path) {
    std::string stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? std::string("K") : stem;
}

// Accepts a graded-map object, the surface_monodromy shortcut, or a bare
// matrix (read as a surface monodromy).
GradedMap load_graded(const std::string& path) {
    json j = io::read_json_file(path);
    if (j.is_array() || (j.is_object() && j.contains("rows")))
        return GradedMap::surface(io::matrix_from_json(j));
    return io::graded_from_json(j);
}

// Accepts a knot object or a bare matrix; the file stem names an ad-hoc knot.
FiberedKnot load_knot(const std::string& path) {
    json j = io::read_json_file(path);
    if (j.is_object() && j.contains("monodromy"))
        return io::knot_from_json(j);
    Matrix m = io::matrix_from_json(j);
    return make_fibered_knot(file_stem(path), m.rows() / 2, m);
}

ManifoldInvariant load_manifold(const std::string& path) {
    return io::manifold_from_json(io::read_json_file(path));
}

const char* pass_fail(bool b) {
    return b ? "pass" : "FAIL";
}

void print_audit_pretty(std::ostream& out, const AlexanderAudit& a) {
    out << "integer coefficients: " << pass_fail(a.integer_coefficients) << "\n";
    out << "monic of degree 2g: " << pass_fail(a.monic_degree) << "\n";
    out << "palindromic: " << pass_fail(a.palindromic) << "\n";
    out << "value at 1: " << rat_to_string(a.value_at_one)
        << ", unit: " << pass_fail(a.unit_at_one) << "\n";
    out << "overall: " << pass_fail(a.all_pass()) << "\n";
}

void print_homology_pretty(std::ostream& out, const HomologyReport& h) {
    out << "b1 = " << h.b1 << "\n";
    if (h.torsion.empty()) {
        out << "torsion: none\n";
    } else {
        out << "torsion:";
        for (const auto& t : h.torsion)
            out << " Z/" << t.get_str();
        out << "\n";
    }
}

void print_manifold_pretty(std::ostream& out, const ManifoldInvariant& m) {
    out << m.name << "\n";
    out << "  series: " << m.series.str() << "\n";
    out << "  complex dim: " << m.complex_dim << ", fiber genus: " << m.fiber_genus
        << ", kappa multiple: " << m.kappa_multiple << "\n";
    out << "  completeness: " << completeness_label(m.completeness) << ", sw_equal: "
        << (m.sw_equal ? "true" : "false") << "\n";
    if (m.homology) {
        out << "  b1 = " << m.homology->b1;
        if (!m.homology->torsion.empty()) {
            out << ", torsion:";
            for (const auto& t : m.homology->torsion)
                out << " Z/" << t.get_str();
        }
        out << "\n";
    }
    for (const auto& n : m.notes)
        out << "  note: " << n << "\n";
}

struct CommandState {
    bool pretty = false;

    std::string zeta_map;
    std::string zeta_method = "det";
    long zeta_order = kDefaultOrder;

    std::string alex_knot;
    std::string alex_monodromy;
    bool alex_audit = false;

    std::string lef_map;
    long lef_power = 1;

    std::string hom_monodromy;

    std::string cls_matrix;
    long cls_walls = 24;
    long cls_powers = 0;

    std::string orb_matrix;
    long orb_max_period = 1;

    std::string xf_monodromy;
    long xf_genus = 1;

    long en_n = 0;

    long enk_n = 0;
    std::string enk_knot;
    std::string enk_monodromy;

    std::vector<std::string> fsum_paths;

    long prod_euler = 2;
    std::string prod_path;

    std::vector<std::string> cmp_paths;
    long cmp_order = kDefaultOrder;

    long rel_order = kDefaultOrder;
};

void run_zeta(const CommandState& st, std::ostream& out) {
    GradedMap g = load_graded(st.zeta_map);
    int order = static_cast<int>(st.zeta_order);
    json result;
    result["method"] = st.zeta_method;
    result["order"] = order;
    TruncatedSeries series(order);
    if (st.zeta_method == "det") {
        RationalFunction z = zeta_det(g);
        series = ratfun_expand(z, order);
        result["rational_function"] = io::ratfun_to_json(z);
    } else if (st.zeta_method == "trace") {
        series = zeta_trace(g, order);
    } else {
        if (!g.is_surface_shape() || g.map(1).rows() != 2)
            throw DomainError("the orbit method needs a genus-1 surface monodromy");
        OrbitData data = toral_orbit_data(g.map(1), order);
        series = zeta_from_orbits(data, order);
        result["orbits"] = io::orbits_to_json(data)["orbits"];
    }
    result["series"] = io::series_to_json(series);
    if (st.pretty) {
        if (st.zeta_method == "det")
            out << zeta_det(g).str() << "\n";
        out << series.str() << "\n";
    } else {
        emit(out, result);
    }
}

void run_alexander(const CommandState& st, std::ostream& out) {
    FiberedKnot k = st.alex_knot.empty() ? load_knot(st.alex_monodromy)
                                         : builtin_knot(st.alex_knot);
    Polynomial a = alexander(k);
    if (st.pretty) {
        out << a.str() << "\n";
        if (st.alex_audit)
            print_audit_pretty(out, alexander_audit(a, k.genus));
        return;
    }
    json result = io::polynomial_to_json(a);
    if (st.alex_audit)
        result["audit"] = io::audit_to_json(alexander_audit(a, k.genus));
    emit(out, result);
}

void run_lefschetz(const CommandState& st, std::ostream& out) {
    GradedMap g = load_graded(st.lef_map);
    Int value = lefschetz(g, st.lef_power);
    if (st.pretty) {
        out << value.get_str() << "\n";
        return;
    }
    emit(out, json{{"power", st.lef_power}, {"lefschetz", io::int_to_json(value)}});
}

void run_homology(const CommandState& st, std::ostream& out) {
    Matrix m = io::matrix_from_json(io::read_json_file(st.hom_monodromy));
    HomologyReport h = mapping_torus_homology(m);
    if (st.pretty)
        print_homology_pretty(out, h);
    else
        emit(out, io::homology_to_json(h));
}

void run_classify(const CommandState& st, std::ostream& out) {
    Matrix m = io::matrix_from_json(io::read_json_file(st.cls_matrix));
    ClassificationReport report = type_profile(m, st.cls_walls);
    json result = io::classification_to_json(report);
    if (st.cls_powers > 0) {
        json signs = json::array();
        for (long p = 1; p <= st.cls_powers; ++p) {
            json row{{"m", p}, {"predicted", sign_power_predicted(report.profile, p)}};
            try {
                int exact = sign_power_exact(m, p);
                row["exact"] = exact;
                row["agree"] = (exact == row["predicted"].get<int>());
            } catch (const WallError&) {
                row["wall"] = true;
            }
            signs.push_back(row);
        }
        result["signs"] = signs;
    }
    if (!st.pretty) {
        emit(out, result);
        return;
    }
    out << "type " << type_label(report.profile.type) << " (P = " << report.profile.positive_pairs
        << ", N = " << report.profile.negative_pairs << ")\n";
    out << "real characteristic roots: " << report.positive_axis_roots.with_multiplicity
        << " positive, " << report.negative_axis_roots.with_multiplicity << " negative\n";
    out << "walls (m <= " << report.wall_bound << "):";
    if (report.walls.empty()) {
        out << " none\n";
    } else {
        for (long w : report.walls)
            out << " " << w;
        out << "\n";
    }
    for (const auto& row : result.value("signs", json::array())) {
        out << "m = " << row["m"].get<long>() << ": predicted "
            << row["predicted"].get<int>();
        if (row.contains("wall"))
            out << ", on a wall\n";
        else
            out << ", exact " << row["exact"].get<int>()
                << (row["agree"].get<bool>() ? "" : "  (DISAGREE)") << "\n";
    }
}

void run_orbits(const CommandState& st, std::ostream& out) {
    Matrix m = io::matrix_from_json(io::read_json_file(st.orb_matrix));
    OrbitData data = toral_orbit_data(m, st.orb_max_period);
    if (!st.pretty) {
        emit(out, io::orbits_to_json(data));
        return;
    }
    for (const auto& [period, counts] : data.by_period())
        out << "period " << period << ": e = " << counts.elliptic.get_str()
            << ", h = " << counts.hyperbolic.get_str()
            << ", h' = " << counts.neg_hyperbolic.get_str() << "\n";
}

void emit_manifold(const CommandState& st, std::ostream& out, const ManifoldInvariant& m) {
    if (st.pretty)
        print_manifold_pretty(out, m);
    else
        emit(out, io::manifold_to_json(m));
}

void run_gromov_xf(const CommandState& st, std::ostream& out) {
    Matrix m = io::matrix_from_json(io::read_json_file(st.xf_monodromy));
    if (m.rows() != 2 * st.xf_genus)
        throw ValidationError("monodromy size does not match the requested genus");
    emit_manifold(st, out, mapping_torus(m, st.xf_genus));
}

void run_gromov_en(const CommandState& st, std::ostream& out) {
    emit_manifold(st, out, elliptic_surface(st.en_n));
}

void run_gromov_enk(const CommandState& st, std::ostream& out) {
    ManifoldInvariant base = elliptic_surface(st.enk_n);
    if (!st.enk_knot.empty()) {
        emit_manifold(st, out, knot_surgery(base, builtin_knot(st.enk_knot)));
    } else {
        FiberedKnot k = load_knot(st.enk_monodromy);
        emit_manifold(st, out, knot_surgery(base, k));
    }
}

void run_gromov_fiber_sum(const CommandState& st, std::ostream& out) {
    ManifoldInvariant a = load_manifold(st.fsum_paths[0]);
    ManifoldInvariant b = load_manifold(st.fsum_paths[1]);
    emit_manifold(st, out, fiber_sum(a, b));
}

void run_gromov_product(const CommandState& st, std::ostream& out) {
    emit_manifold(st, out, sphere_product(load_manifold(st.prod_path), st.prod_euler));
}

void run_compare(const CommandState& st, std::ostream& out) {
    ManifoldInvariant a = load_manifold(st.cmp_paths[0]);
    ManifoldInvariant b = load_manifold(st.cmp_paths[1]);
    DistinguishReport report = distinguish(a, b, static_cast<int>(st.cmp_order));
    if (!st.pretty) {
        emit(out, io::distinguish_to_json(report));
        return;
    }
    if (report.equal)
        out << "equal through t^" << report.order << "\n";
    else
        out << "first difference at t^" << report.first_difference << ": "
            << rat_to_string(report.left) << " vs " << rat_to_string(report.right) << "\n";
}

// Verifies the two local bifurcation relations between orbit factors: an
// elliptic/hyperbolic pair cancels, f_E(t^k) f_H(t^k) = 1, and a negative
// hyperbolic orbit splits as f_H'(t^k) = f_E(t^k) f_H(t^2k).
void run_relations(const CommandState& st, std::ostream& out) {
    constexpr long kMaxK = 5;
    int order = static_cast<int>(st.rel_order);
    TruncatedSeries one = TruncatedSeries::constant(Rat(1), order);
    json checks = json::array();
    bool all_hold = true;
    for (long k = 1; k <= kMaxK; ++k) {
        RationalFunction fe = orbit_factor(SymplecticType::Elliptic, k);
        RationalFunction fh = orbit_factor(SymplecticType::Hyperbolic, k);
        RationalFunction fh2 = orbit_factor(SymplecticType::Hyperbolic, 2 * k);
        RationalFunction fhp = orbit_factor(SymplecticType::NegHyperbolic, k);
        bool pair = (fe * fh == RationalFunction::one()) &&
                    (ratfun_expand(fe, order) * ratfun_expand(fh, order) == one);
        bool division = (fhp == fe * fh2) &&
                        (ratfun_expand(fhp, order) ==
                         ratfun_expand(fe, order) * ratfun_expand(fh2, order));
        all_hold = all_hold && pair && division;
        checks.push_back(json{{"k", k}, {"pair_creation", pair}, {"division", division}});
    }
    if (st.pretty) {
        for (const auto& row : checks)
            out << "k = " << row["k"].get<long>()
                << "  pair creation: " << pass_fail(row["pair_creation"].get<bool>())
                << "  division: " << pass_fail(row["division"].get<bool>()) << "\n";
        out << (all_hold ? "all relations hold" : "RELATION FAILURE") << " through t^"
            << order << "\n";
    } else {
        emit(out, json{{"order", order},
                       {"max_k", kMaxK},
                       {"checks", checks},
                       {"all_hold", all_hold}});
    }
    if (!all_hold)
        throw InternalError("an orbit-factor relation failed to hold");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandState st;

    if (const char* env = std::getenv(kOrderEnv)) {
        try {
            size_t used = 0;
            long value = std::stol(env, &used);
            if (used != std::string(env).size() || value < 0 || value > 100000)
                throw std::invalid_argument("range");
            st.zeta_order = st.cmp_order = st.rel_order = value;
        } catch (const std::exception&) {
            err << "error: " << kOrderEnv << " must be an integer in [0, 100000], got '"
                << env << "'\n";
            return 2;
        }
    }

    CLI::App app{"Exact zeta functions, Alexander polynomials and Gromov series"};
    app.require_subcommand(1);

    auto add_order = [](CLI::App* sub, long& target, const char* what) {
        sub->add_option("--order", target, what)->check(CLI::Range(0L, 100000L));
    };
    auto add_pretty = [&st](CLI::App* sub) {
        sub->add_flag("--pretty", st.pretty, "human-readable output instead of JSON");
    };

    CLI::App* zeta = app.add_subcommand("zeta", "Zeta function of a graded homology map");
    zeta->add_option("--map", st.zeta_map, "graded map JSON file")->required();
    zeta->add_option("--method", st.zeta_method, "computation route")
        ->check(CLI::IsMember({"det", "trace", "orbits"}));
    add_order(zeta, st.zeta_order, "series truncation order");
    add_pretty(zeta);

    CLI::App* alex = app.add_subcommand("alexander", "Alexander polynomial of a fibered knot");
    auto* alex_knot =
        alex->add_option("--knot", st.alex_knot, "built-in knot name (trefoil, figure8)");
    auto* alex_mono =
        alex->add_option("--monodromy", st.alex_monodromy, "knot or monodromy JSON file");
    alex_knot->excludes(alex_mono);
    alex_mono->excludes(alex_knot);
    alex->add_flag("--audit", st.alex_audit, "attach the classical-constraint audit");
    add_pretty(alex);

    CLI::App* lef = app.add_subcommand("lefschetz", "Lefschetz number of an iterate");
    lef->add_option("--map", st.lef_map, "graded map JSON file")->required();
    lef->add_option("--power", st.lef_power, "iterate n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    add_pretty(lef);

    CLI::App* hom =
        app.add_subcommand("homology-xf", "First homology of the mapping torus over T^2");
    hom->add_option("--monodromy", st.hom_monodromy, "matrix JSON file")->required();
    add_pretty(hom);

    CLI::App* cls = app.add_subcommand("classify", "Residual type of a symplectic matrix");
    cls->add_option("--matrix", st.cls_matrix, "matrix JSON file")->required();
    cls->add_option("--walls", st.cls_walls, "report wall memberships up to this m")
        ->check(CLI::NonNegativeNumber);
    cls->add_option("--powers", st.cls_powers, "tabulate predicted vs exact signs up to this m")
        ->check(CLI::NonNegativeNumber);
    add_pretty(cls);

    CLI::App* orb = app.add_subcommand("orbits", "Closed-orbit census of a torus automorphism");
    orb->add_option("--matrix", st.orb_matrix, "2x2 matrix JSON file")->required();
    orb->add_option("--max-period", st.orb_max_period, "largest minimal period")
        ->required()
        ->check(CLI::PositiveNumber);
    add_pretty(orb);

    CLI::App* gromov = app.add_subcommand("gromov", "Degree-zero Gromov series records");
    gromov->require_subcommand(1);

    CLI::App* gxf = gromov->add_subcommand("xf", "Mapping torus of a surface symplectomorphism");
    gxf->add_option("--monodromy", st.xf_monodromy, "matrix JSON file")->required();
    gxf->add_option("--genus", st.xf_genus, "fiber genus g >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    add_pretty(gxf);

    CLI::App* gen = gromov->add_subcommand("en", "Simply connected elliptic surface E(n)");
    gen->add_option("--n", st.en_n, "index n >= 0")->required();
    add_pretty(gen);

    CLI::App* genk = gromov->add_subcommand("enk", "Knot surgery on E(n)");
    genk->add_option("--n", st.enk_n, "index n >= 0")->required();
    auto* genk_knot = genk->add_option("--knot", st.enk_knot, "built-in knot name");
    auto* genk_mono =
        genk->add_option("--monodromy", st.enk_monodromy, "knot or monodromy JSON file");
    genk_knot->excludes(genk_mono);
    genk_mono->excludes(genk_knot);
    add_pretty(genk);

    CLI::App* gfs = gromov->add_subcommand("fiber-sum", "Fiber sum of two records");
    gfs->add_option("inputs", st.fsum_paths, "two manifold record JSON files")
        ->expected(2)
        ->required();
    add_pretty(gfs);

    CLI::App* gpr = gromov->add_subcommand("product", "Product with a surface of given chi");
    gpr->add_option("--euler", st.prod_euler, "Euler characteristic of the second factor")
        ->required();
    gpr->add_option("input", st.prod_path, "manifold record JSON file")->required();
    add_pretty(gpr);

    CLI::App* cmp = app.add_subcommand("compare", "Compare two records coefficient by coefficient");
    cmp->add_option("inputs", st.cmp_paths, "two manifold record JSON files")
        ->expected(2)
        ->required();
    add_order(cmp, st.cmp_order, "comparison order");
    add_pretty(cmp);

    CLI::App* rel = app.add_subcommand("relations", "Verify the orbit-factor relations");
    add_order(rel, st.rel_order, "series truncation order");
    add_pretty(rel);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gromzeta");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (alex->parsed() && st.alex_knot.empty() && st.alex_monodromy.empty())
            throw ValidationError("alexander needs --knot or --monodromy");
        if (genk->parsed() && st.enk_knot.empty() && st.enk_monodromy.empty())
            throw ValidationError("gromov enk needs --knot or --monodromy");

        if (zeta->parsed())
            run_zeta(st, out);
        else if (alex->parsed())
            run_alexander(st, out);
        else if (lef->parsed())
            run_lefschetz(st, out);
        else if (hom->parsed())
            run_homology(st, out);
        else if (cls->parsed())
            run_classify(st, out);
        else if (orb->parsed())
            run_orbits(st, out);
        else if (gxf->parsed())
            run_gromov_xf(st, out);
        else if (gen->parsed())
            run_gromov_en(st, out);
        else if (genk->parsed())
            run_gromov_enk(st, out);
        else if (gfs->parsed())
            run_gromov_fiber_sum(st, out);
        else if (gpr->parsed())
            run_gromov_product(st, out);
        else if (cmp->parsed())
            run_compare(st, out);
        else if (rel->parsed())
            run_relations(st, out);
        return 0;
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << single_line(e.what()) << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "error: internal: " << single_line(e.what()) << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << single_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << single_line(e.what()) << "\n";
        return 1;
    }
}

}  // namespace gromzeta
