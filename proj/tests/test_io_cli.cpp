#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gromzeta/cli.hpp"
#include "gromzeta/errors.hpp"
#include "gromzeta/json_io.hpp"
#include "gromzeta/manifolds.hpp"

using namespace gromzeta;
using io::json;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json cli_json(const std::vector<std::string>& args) {
    CliResult r = cli(args);
    REQUIRE(r.code == 0);
    REQUIRE(r.err.empty());
    return json::parse(r.out);
}

// Writes content to a fresh file in a per-run scratch directory and returns
// the path; negative-input files are created here rather than committed.
std::string scratch_file(const std::string& name, const std::string& content) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("gromzeta-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    std::filesystem::path p = dir / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

Polynomial P(const std::vector<long>& c) {
    return Polynomial(std::vector<Rat>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("scalar JSON forms") {
    CHECK(io::entry_to_json(Rat(7)) == json(7));
    CHECK(io::entry_to_json(Rat(-3)) == json(-3));
    CHECK(io::entry_to_json(Rat(1, 2)) == json("1/2"));

    // 2^53 - 1 survives a double round trip, 2^53 does not.
    Int edge("9007199254740991");
    CHECK(io::entry_to_json(Rat(edge)) == json(9007199254740991LL));
    CHECK(io::entry_to_json(Rat(edge + 1)) == json("9007199254740992"));
    CHECK(io::entry_to_json(Rat(-(edge + 1))) == json("-9007199254740992"));

    CHECK(io::entry_from_json(json(7)) == 7);
    CHECK(io::entry_from_json(json("9007199254740992")) == Rat(edge + 1));
    CHECK(io::entry_from_json(json("-3/6")) == Rat(-1, 2));
    CHECK_THROWS_AS(io::entry_from_json(json(1.5)), ParseError);
    CHECK_THROWS_AS(io::entry_from_json(json(true)), ParseError);
    CHECK_THROWS_AS(io::entry_from_json(json("pi")), ParseError);
    CHECK_THROWS_AS(io::entry_from_json(json("1/0")), ParseError);

    Int big("123456789012345678901234567890");
    CHECK(io::int_from_json(io::int_to_json(big)) == big);
    CHECK(io::int_to_json(Int(12)) == json(12));
    CHECK_THROWS_AS(io::int_from_json(json("2/3")), ParseError);
}

TEST_CASE("matrix JSON forms") {
    Matrix m(2, 2, {Rat(1, 2), Rat(0), Rat(0), Rat(2)});
    CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    CHECK(io::matrix_from_json(io::matrix_rows_json(m)) == m);
    CHECK(io::matrix_to_json(m)["rows"][0][0] == json("1/2"));

    CHECK(io::matrix_from_rows(json::parse("[]"), true) == Matrix(0, 0));
    CHECK_THROWS_AS(io::matrix_from_rows(json::parse("[]")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_rows(json::parse("[[1],[1,2]]")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_rows(json::parse("[[1.5]]")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("{\"cols\":[[1]]}")), ParseError);
}

TEST_CASE("polynomial, series and rational function JSON forms") {
    Polynomial p = P({1, -3, 1});
    CHECK(io::polynomial_from_json(io::polynomial_to_json(p)) == p);
    CHECK(io::polynomial_to_json(Polynomial())["coefficients"] == json::parse("[0]"));

    TruncatedSeries s(3, {Rat(1), Rat(-1, 2), Rat(0), Rat(7)});
    json js = io::series_to_json(s);
    CHECK(js["order"] == 3);
    REQUIRE(js["coefficients"].size() == 4);
    for (const auto& c : js["coefficients"])
        CHECK(c.is_string());
    CHECK(js["coefficients"][1] == json("-1/2"));
    CHECK(io::series_from_json(js) == s);

    RationalFunction r(P({1, -3, 1}), P({1, -2, 1}));
    CHECK(io::ratfun_from_json(io::ratfun_to_json(r)) == r);
    CHECK(io::ratfun_to_json(r)["numerator"]["coefficients"] == json::parse("[1,-3,1]"));
}

TEST_CASE("graded map JSON forms") {
    GradedMap g = GradedMap::surface(Matrix{{2, 1}, {1, 1}});
    GradedMap back = io::graded_from_json(io::graded_to_json(g));
    REQUIRE(back.top_degree() == 2);
    for (int d = 0; d <= 2; ++d)
        CHECK(back.map(d) == g.map(d));

    json shortcut = json::parse("{\"surface_monodromy\": [[2,1],[1,1]]}");
    GradedMap viaShortcut = io::graded_from_json(shortcut);
    CHECK(viaShortcut.map(1) == Matrix{{2, 1}, {1, 1}});

    // A missing degree reads back as the 0x0 map.
    json sphere = json::parse("{\"top_degree\": 2, \"maps\": {\"0\": [[1]], \"2\": [[1]]}}");
    GradedMap viaSphere = io::graded_from_json(sphere);
    CHECK(viaSphere.map(1) == Matrix(0, 0));
    CHECK_FALSE(viaSphere.is_surface_shape());
}

TEST_CASE("knot and orbit JSON forms") {
    FiberedKnot k = io::knot_from_json(io::read_json_file(fixture("trefoil.json")));
    CHECK(k.name == "trefoil");
    CHECK(k.genus == 1);
    CHECK(k.monodromy == Matrix{{1, 1}, {-1, 0}});
    CHECK(k.note.substr(0, 11) == "some tables");
    FiberedKnot back = io::knot_from_json(io::knot_to_json(k));
    CHECK(back.note == k.note);

    OrbitData data;
    data.add(1, OrbitCounts{Int(0), Int(1), Int(0)});
    data.add(3, OrbitCounts{Int(2), Int(0), Int(5)});
    OrbitData rt = io::orbits_from_json(io::orbits_to_json(data));
    REQUIRE(rt.max_period() == 3);
    CHECK(rt.by_period().at(1).hyperbolic == 1);
    CHECK(rt.by_period().at(3).elliptic == 2);
    CHECK(rt.by_period().at(3).neg_hyperbolic == 5);
}

TEST_CASE("manifold JSON round trip") {
    ManifoldInvariant x = mapping_torus(Matrix{{2, 1}, {1, 1}}, 1, "X_fig8");
    ManifoldInvariant back = io::manifold_from_json(io::manifold_to_json(x));
    CHECK(back.name == x.name);
    CHECK(back.complex_dim == x.complex_dim);
    CHECK(back.fiber_genus == x.fiber_genus);
    CHECK(back.kappa_multiple == x.kappa_multiple);
    CHECK(back.series == x.series);
    CHECK(back.completeness == x.completeness);
    CHECK(back.sw_equal == x.sw_equal);
    REQUIRE(back.homology.has_value());
    CHECK(back.homology->b1 == 2);

    ManifoldInvariant torsion = mapping_torus(-Matrix::identity(2), 1);
    ManifoldInvariant tback = io::manifold_from_json(io::manifold_to_json(torsion));
    REQUIRE(tback.homology.has_value());
    CHECK(tback.homology->torsion == std::vector<Int>{Int(2), Int(2)});
    CHECK(tback.notes == torsion.notes);

    ManifoldInvariant e2 = elliptic_surface(2);
    ManifoldInvariant eback = io::manifold_from_json(io::manifold_to_json(e2));
    CHECK_FALSE(eback.homology.has_value());
    CHECK(eback.completeness == Completeness::Full);
    CHECK(eback.sw_equal);
}

TEST_CASE("report serializers") {
    json c = io::classification_to_json(type_profile(Matrix{{2, 1}, {1, 1}}));
    CHECK(c["P"] == 1);
    CHECK(c["N"] == 0);
    CHECK(c["tag"] == "H");
    CHECK(c["positive_axis"]["with_multiplicity"] == 2);
    CHECK(c["walls"] == json::array());

    json a = io::audit_to_json(alexander_audit(P({1, -3, 1}), 1));
    CHECK(a["all_pass"] == true);
    CHECK(a["value_at_one"] == -1);

    DistinguishReport same;
    same.order = 4;
    json d = io::distinguish_to_json(same);
    CHECK(d["equal"] == true);
    CHECK_FALSE(d.contains("first_difference"));

    DistinguishReport diff;
    diff.order = 4;
    diff.equal = false;
    diff.first_difference = 1;
    diff.left = Rat(0);
    diff.right = Rat(-3);
    json dd = io::distinguish_to_json(diff);
    CHECK(dd["first_difference"] == 1);
    CHECK(dd["left"] == "0");
    CHECK(dd["right"] == "-3");
}

TEST_CASE("file reading errors") {
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), ParseError);
    std::string broken = scratch_file("broken.json", "{\"rows\": [[1,");
    CHECK_THROWS_AS(io::read_json_file(broken), ParseError);
}

TEST_CASE("alexander command") {
    CliResult tre = cli({"alexander", "--knot", "trefoil"});
    CHECK(tre.code == 0);
    CHECK(tre.out == "{\"coefficients\":[1,-1,1]}\n");

    json fig8 = cli_json({"alexander", "--knot", "figure8", "--audit"});
    CHECK(fig8["coefficients"] == json::parse("[1,-3,1]"));
    CHECK(fig8["audit"]["all_pass"] == true);
    CHECK(fig8["audit"]["value_at_one"] == -1);

    json viaFile = cli_json({"alexander", "--monodromy", fixture("figure8.json")});
    CHECK(viaFile["coefficients"] == json::parse("[1,-3,1]"));
    json viaMatrix = cli_json({"alexander", "--monodromy", fixture("fig8_matrix.json")});
    CHECK(viaMatrix["coefficients"] == json::parse("[1,-3,1]"));

    CliResult pretty = cli({"alexander", "--knot", "trefoil", "--pretty"});
    CHECK(pretty.out == "1 - t + t^2\n");

    CliResult unknown = cli({"alexander", "--knot", "unknot"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.substr(0, 6) == "error:");
    CHECK(unknown.err.find('\n') == unknown.err.size() - 1);

    CHECK(cli({"alexander"}).code == 2);
    CHECK(cli({"alexander", "--knot", "trefoil", "--monodromy",
               fixture("figure8.json")}).code == 2);
}

TEST_CASE("zeta command methods agree on the fixtures") {
    json det = cli_json({"zeta", "--map", fixture("fig8_map.json"), "--order", "3"});
    CHECK(det["series"]["coefficients"] == json::parse("[\"1\",\"-1\",\"-2\",\"-3\"]"));
    CHECK(det["rational_function"]["numerator"]["coefficients"] ==
          json::parse("[1,-3,1]"));

    json trace = cli_json({"zeta", "--map", fixture("fig8_map.json"), "--order", "3",
                           "--method", "trace"});
    CHECK_FALSE(trace.contains("rational_function"));
    json orbits = cli_json({"zeta", "--map", fixture("fig8_map.json"), "--order", "3",
                            "--method", "orbits"});
    CHECK(trace["series"] == det["series"]);
    CHECK(orbits["series"] == det["series"]);
    REQUIRE(orbits["orbits"].size() == 3);
    CHECK(orbits["orbits"][2] ==
          json::parse("{\"e\":0,\"h\":5,\"h_prime\":0,\"period\":3}"));

    // The determinant method handles any graded map; the orbit method is
    // restricted to hyperbolic torus monodromies.
    json sphere = cli_json({"zeta", "--map", fixture("sphere_graded.json"), "--order", "2"});
    CHECK(sphere["rational_function"]["denominator"]["coefficients"] ==
          json::parse("[1,-2,1]"));
    CHECK(cli({"zeta", "--map", fixture("sphere_graded.json"), "--method", "orbits"}).code == 2);
    CHECK(cli({"zeta", "--map", fixture("thurston_map.json"), "--method", "orbits"}).code == 2);

    json unipotent = cli_json({"zeta", "--map", fixture("thurston_map.json"), "--order", "4"});
    CHECK(unipotent["rational_function"]["numerator"]["coefficients"] == json::parse("[1]"));
    CHECK(unipotent["series"]["coefficients"] ==
          json::parse("[\"1\",\"0\",\"0\",\"0\",\"0\"]"));

    CHECK(cli({"zeta", "--map", fixture("fig8_map.json"), "--method", "qr"}).code == 2);
    CHECK(cli({"zeta", "--map", "/nonexistent.json"}).code == 2);
}

TEST_CASE("lefschetz and homology commands") {
    CliResult lef = cli({"lefschetz", "--map", fixture("fig8_map.json"), "--power", "3"});
    CHECK(lef.code == 0);
    CHECK(lef.out == "{\"lefschetz\":-16,\"power\":3}\n");
    CHECK(cli({"lefschetz", "--map", fixture("fig8_map.json"), "--power", "0"}).code == 2);

    CliResult hom = cli({"homology-xf", "--monodromy", fixture("fig8_matrix.json")});
    CHECK(hom.out == "{\"b1\":2,\"torsion\":[]}\n");
    CliResult hpretty =
        cli({"homology-xf", "--monodromy", fixture("thurston_map.json"), "--pretty"});
    CHECK(hpretty.code == 2);  // plain matrix expected, not a graded-map file

    std::string minus = scratch_file("minus_identity.json", "[[-1,0],[0,-1]]");
    CliResult torsion = cli({"homology-xf", "--monodromy", minus});
    CHECK(torsion.out == "{\"b1\":2,\"torsion\":[2,2]}\n");
    CliResult tpretty = cli({"homology-xf", "--monodromy", minus, "--pretty"});
    CHECK(tpretty.out == "b1 = 2\ntorsion: Z/2 Z/2\n");
}

TEST_CASE("classify and orbits commands") {
    json fig8 = cli_json({"classify", "--matrix", fixture("fig8_matrix.json"),
                          "--powers", "3"});
    CHECK(fig8["tag"] == "H");
    CHECK(fig8["P"] == 1);
    REQUIRE(fig8["signs"].size() == 3);
    for (const auto& row : fig8["signs"])
        CHECK(row["agree"] == true);

    json neg = cli_json({"classify", "--matrix", fixture("neg_fig8_matrix.json")});
    CHECK(neg["tag"] == "H'");
    CHECK(neg["N"] == 1);
    CHECK_FALSE(neg.contains("signs"));

    std::string identity = scratch_file("identity2.json", "[[1,0],[0,1]]");
    CHECK(cli({"classify", "--matrix", identity}).code == 2);

    json orbits = cli_json({"orbits", "--matrix", fixture("fig8_matrix.json"),
                            "--max-period", "3"});
    REQUIRE(orbits["orbits"].size() == 3);
    CHECK(orbits["orbits"][0]["h"] == 1);
    CHECK(orbits["orbits"][1]["h"] == 2);
    CHECK(orbits["orbits"][2]["h"] == 5);
    CHECK(cli({"orbits", "--matrix", identity, "--max-period", "3"}).code == 2);
}

TEST_CASE("gromov commands") {
    json xf = cli_json({"gromov", "xf", "--monodromy", fixture("fig8_matrix.json"),
                        "--genus", "1"});
    CHECK(xf["name"] == "X_f");
    CHECK(xf["series"]["numerator"]["coefficients"] == json::parse("[1,-3,1]"));
    CHECK(xf["completeness"] == "full");
    CHECK(xf["homology"]["b1"] == 2);
    CHECK(cli({"gromov", "xf", "--monodromy", fixture("fig8_matrix.json"),
               "--genus", "2"}).code == 2);

    json e2 = cli_json({"gromov", "en", "--n", "2"});
    CHECK(e2["name"] == "E(2)");
    CHECK(e2["completeness"] == "full");
    CHECK(e2["sw_equal"] == true);
    CHECK(cli({"gromov", "en", "--n", "-1"}).code == 2);

    json enk = cli_json({"gromov", "enk", "--n", "2", "--knot", "figure8"});
    CHECK(enk["name"] == "E(2,figure8)");
    CHECK(enk["series"]["numerator"]["coefficients"] == json::parse("[1,-3,1]"));
    json enk1 = cli_json({"gromov", "enk", "--n", "1", "--monodromy",
                          fixture("figure8.json")});
    CHECK(enk1["completeness"] == "partial_with_sw_note");
    CHECK(cli({"gromov", "enk", "--n", "2"}).code == 2);
    CHECK(cli({"gromov", "enk", "--n", "2", "--knot", "figure8", "--monodromy",
               fixture("figure8.json")}).code == 2);

    std::string e2file = scratch_file("e2.json", cli({"gromov", "en", "--n", "2"}).out);
    std::string xffile = scratch_file(
        "xf.json", cli({"gromov", "xf", "--monodromy", fixture("fig8_matrix.json"),
                        "--genus", "1"}).out);

    // Summing E(2) against the mapping torus reproduces the surgered record.
    json sum = cli_json({"gromov", "fiber-sum", e2file, xffile});
    CHECK(sum["name"] == "E(2) # X_f");
    CHECK(sum["series"] == enk["series"]);

    json prod = cli_json({"gromov", "product", "--euler", "2", xffile});
    CHECK(prod["complex_dim"] == 3);
    CHECK(prod["series"]["numerator"]["coefficients"] ==
          json::parse("[1,-6,11,-6,1]"));
}

TEST_CASE("compare and relations commands") {
    std::string e2file = scratch_file("cmp_e2.json", cli({"gromov", "en", "--n", "2"}).out);
    std::string enkfile = scratch_file(
        "cmp_enk.json", cli({"gromov", "enk", "--n", "2", "--knot", "figure8"}).out);

    json diff = cli_json({"compare", e2file, enkfile, "--order", "4"});
    CHECK(diff["equal"] == false);
    CHECK(diff["first_difference"] == 1);
    CHECK(diff["left"] == "0");
    CHECK(diff["right"] == "-3");

    // Emitted records survive the round trip bit-for-bit as series.
    json same = cli_json({"compare", enkfile, enkfile});
    CHECK(same["equal"] == true);
    CHECK(same["order"] == 16);

    CliResult pretty = cli({"compare", e2file, enkfile, "--order", "4", "--pretty"});
    CHECK(pretty.out == "first difference at t^1: 0 vs -3\n");

    json rel = cli_json({"relations", "--order", "6"});
    CHECK(rel["all_hold"] == true);
    CHECK(rel["order"] == 6);
    REQUIRE(rel["checks"].size() == 5);
    CliResult rpretty = cli({"relations", "--order", "6", "--pretty"});
    CHECK(rpretty.out.find("all relations hold through t^6") != std::string::npos);
}

TEST_CASE("environment default order") {
    REQUIRE(::setenv("GROMZETA_ORDER", "7", 1) == 0);
    std::string e2file = scratch_file("env_e2.json", cli({"gromov", "en", "--n", "2"}).out);
    json same = cli_json({"compare", e2file, e2file});
    CHECK(same["order"] == 7);
    json zeta = cli_json({"zeta", "--map", fixture("fig8_map.json")});
    CHECK(zeta["series"]["order"] == 7);
    json override = cli_json({"zeta", "--map", fixture("fig8_map.json"), "--order", "2"});
    CHECK(override["series"]["order"] == 2);

    REQUIRE(::setenv("GROMZETA_ORDER", "junk", 1) == 0);
    CliResult bad = cli({"gromov", "en", "--n", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.substr(0, 6) == "error:");
    REQUIRE(::unsetenv("GROMZETA_ORDER") == 0);

    json fallback = cli_json({"zeta", "--map", fixture("fig8_map.json")});
    CHECK(fallback["series"]["order"] == 16);
}

TEST_CASE("top-level parsing") {
    CliResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("zeta") != std::string::npos);

    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CliResult unknown = cli({"zeta", "--map", fixture("fig8_map.json"), "--frob"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.substr(0, 6) == "error:");
}
