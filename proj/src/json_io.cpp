#include "gromzeta/json_io.hpp"

#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "gromzeta/errors.hpp"

namespace gromzeta::io {

namespace {

long require_long(const json& j, const char* what) {
    if (j.is_number_integer() && !j.is_number_unsigned())
        return j.get<long>();
    if (j.is_number_unsigned()) {
        unsigned long long v = j.get<unsigned long long>();
        if (v > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
            throw ParseError(std::string(what) + " is out of range");
        return static_cast<long>(v);
    }
    throw ParseError(std::string(what) + " must be an integer");
}

const json& require_field(const json& j, const char* key) {
    if (!j.is_object())
        throw ParseError(std::string("expected an object with field \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

bool require_bool(const json& j, const char* what) {
    if (!j.is_boolean())
        throw ParseError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

std::vector<Rat> entries_from_array(const json& j, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const auto& item : j)
        out.push_back(entry_from_json(item));
    return out;
}

}  // namespace

json entry_to_json(const Rat& r) {
    if (is_integer(r) && fits_json_number(r.get_num()))
        return json(mpz_get_si(r.get_num().get_mpz_t()));
    return json(rat_to_string(r));
}

Rat entry_from_json(const json& j) {
    if (j.is_number_integer() && !j.is_number_unsigned())
        return Rat(Int(j.get<long>()));
    if (j.is_number_unsigned())
        return Rat(Int(j.get<unsigned long>()));
    if (j.is_number_float())
        throw ParseError("floating point entries are not accepted; encode exact values as \"p/q\" strings");
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    throw ParseError("matrix and polynomial entries must be integers or \"p/q\" strings");
}

json int_to_json(const Int& v) {
    if (fits_json_number(v))
        return json(mpz_get_si(v.get_mpz_t()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    Rat r = entry_from_json(j);
    if (r.get_den() != 1)
        throw ParseError("expected an integer value");
    return r.get_num();
}

json matrix_rows_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k)
            row.push_back(entry_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const Matrix& m) {
    return json{{"rows", matrix_rows_json(m)}};
}

Matrix matrix_from_rows(const json& j, bool allow_empty) {
    if (!j.is_array())
        throw ParseError("matrix rows must be an array of arrays");
    if (j.empty()) {
        if (allow_empty)
            return Matrix(0, 0);
        throw ParseError("matrix requires at least one row");
    }
    std::vector<std::vector<Rat>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw ParseError("matrix rows must be non-empty arrays");
        rows.push_back(entries_from_array(row, "matrix row"));
        if (rows.back().size() != rows.front().size())
            throw ParseError("matrix rows must all have the same length");
    }
    if (rows.size() > 4096 || rows.front().size() > 4096)
        throw ParseError("matrix dimensions are unreasonably large");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.front().size());
    std::vector<Rat> flat;
    flat.reserve(static_cast<size_t>(r) * static_cast<size_t>(c));
    for (const auto& row : rows)
        for (const auto& e : row)
            flat.push_back(e);
    return Matrix(r, c, std::move(flat));
}

Matrix matrix_from_json(const json& j) {
    if (j.is_object())
        return matrix_from_rows(require_field(j, "rows"), false);
    if (j.is_array())
        return matrix_from_rows(j, false);
    throw ParseError("expected a matrix object {\"rows\": [[...]]} or a rows array");
}

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    if (p.is_zero()) {
        coeffs.push_back(0);
    } else {
        for (int i = 0; i <= p.degree(); ++i)
            coeffs.push_back(entry_to_json(p.coeff(i)));
    }
    return json{{"coefficients", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_object())
        arr = &require_field(j, "coefficients");
    else if (j.is_array())
        arr = &j;
    else
        throw ParseError("expected a polynomial object {\"coefficients\": [...]}");
    return Polynomial(entries_from_array(*arr, "polynomial coefficients"));
}

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (int i = 0; i <= s.order(); ++i)
        coeffs.push_back(rat_to_string(s.coeff(i)));
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
    long order = require_long(require_field(j, "order"), "series order");
    if (order < 0 || order > 1000000)
        throw ParseError("series order must lie in [0, 10^6]");
    auto coeffs = entries_from_array(require_field(j, "coefficients"), "series coefficients");
    if (coeffs.size() > static_cast<size_t>(order) + 1)
        throw ParseError("series carries more coefficients than its order allows");
    return TruncatedSeries(static_cast<int>(order), std::move(coeffs));
}

json ratfun_to_json(const RationalFunction& r) {
    return json{{"numerator", polynomial_to_json(r.numerator())},
                {"denominator", polynomial_to_json(r.denominator())}};
}

RationalFunction ratfun_from_json(const json& j) {
    return RationalFunction(polynomial_from_json(require_field(j, "numerator")),
                            polynomial_from_json(require_field(j, "denominator")));
}

json graded_to_json(const GradedMap& g) {
    json maps = json::object();
    for (long d = 0; d <= g.top_degree(); ++d)
        maps[std::to_string(d)] = matrix_rows_json(g.map(d));
    return json{{"top_degree", g.top_degree()}, {"maps", maps}};
}

GradedMap graded_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("expected a graded map object");
    if (j.contains("surface_monodromy"))
        return GradedMap::surface(matrix_from_rows(j.at("surface_monodromy"), false));
    long top = require_long(require_field(j, "top_degree"), "top_degree");
    if (top < 0)
        throw ParseError("top_degree must be non-negative");
    const json& maps = require_field(j, "maps");
    if (!maps.is_object())
        throw ParseError("\"maps\" must be an object keyed by degree");
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<size_t>(top) + 1);
    for (long d = 0; d <= top; ++d) {
        auto it = maps.find(std::to_string(d));
        if (it == maps.end())
            blocks.emplace_back(0, 0);
        else
            blocks.push_back(matrix_from_rows(*it, true));
    }
    return GradedMap(std::move(blocks));
}

json knot_to_json(const FiberedKnot& k) {
    json out{{"name", k.name},
             {"genus", k.genus},
             {"monodromy", matrix_rows_json(k.monodromy)}};
    if (!k.note.empty())
        out["note"] = k.note;
    return out;
}

FiberedKnot knot_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("expected a knot object");
    std::string name;
    if (j.contains("name"))
        name = require_string(j.at("name"), "knot name");
    long genus = require_long(require_field(j, "genus"), "knot genus");
    Matrix monodromy = matrix_from_rows(require_field(j, "monodromy"), false);
    FiberedKnot k = make_fibered_knot(name, genus, monodromy);
    if (j.contains("note"))
        k.note = require_string(j.at("note"), "knot note");
    return k;
}

json orbits_to_json(const OrbitData& o) {
    json arr = json::array();
    for (const auto& [period, counts] : o.by_period()) {
        arr.push_back(json{{"period", period},
                           {"e", int_to_json(counts.elliptic)},
                           {"h", int_to_json(counts.hyperbolic)},
                           {"h_prime", int_to_json(counts.neg_hyperbolic)}});
    }
    return json{{"orbits", arr}};
}

OrbitData orbits_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_object())
        arr = &require_field(j, "orbits");
    else if (j.is_array())
        arr = &j;
    else
        throw ParseError("expected an orbit table object {\"orbits\": [...]}");
    if (!arr->is_array())
        throw ParseError("\"orbits\" must be an array");
    OrbitData data;
    for (const auto& item : *arr) {
        if (!item.is_object())
            throw ParseError("each orbit entry must be an object");
        long period = require_long(require_field(item, "period"), "orbit period");
        OrbitCounts counts;
        if (item.contains("e"))
            counts.elliptic = int_from_json(item.at("e"));
        if (item.contains("h"))
            counts.hyperbolic = int_from_json(item.at("h"));
        if (item.contains("h_prime"))
            counts.neg_hyperbolic = int_from_json(item.at("h_prime"));
        data.add(period, counts);
    }
    return data;
}

json homology_to_json(const HomologyReport& h) {
    json torsion = json::array();
    for (const auto& t : h.torsion)
        torsion.push_back(int_to_json(t));
    return json{{"b1", h.b1}, {"torsion", torsion}};
}

json manifold_to_json(const ManifoldInvariant& m) {
    json out{{"name", m.name},
             {"complex_dim", m.complex_dim},
             {"fiber_genus", m.fiber_genus},
             {"kappa_multiple", m.kappa_multiple},
             {"series", ratfun_to_json(m.series)},
             {"completeness", completeness_label(m.completeness)},
             {"sw_equal", m.sw_equal}};
    if (m.homology)
        out["homology"] = homology_to_json(*m.homology);
    if (!m.notes.empty()) {
        json notes = json::array();
        for (const auto& n : m.notes)
            notes.push_back(n);
        out["notes"] = notes;
    }
    return out;
}

ManifoldInvariant manifold_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("expected a manifold record object");
    ManifoldInvariant m;
    m.name = require_string(require_field(j, "name"), "manifold name");
    m.complex_dim = static_cast<int>(require_long(require_field(j, "complex_dim"), "complex_dim"));
    m.fiber_genus = require_long(require_field(j, "fiber_genus"), "fiber_genus");
    m.kappa_multiple = require_long(require_field(j, "kappa_multiple"), "kappa_multiple");
    m.series = ratfun_from_json(require_field(j, "series"));
    m.completeness =
        completeness_from_label(require_string(require_field(j, "completeness"), "completeness"));
    m.sw_equal = require_bool(require_field(j, "sw_equal"), "sw_equal");
    if (j.contains("homology")) {
        const json& h = j.at("homology");
        HomologyReport report;
        report.b1 = require_long(require_field(h, "b1"), "b1");
        if (h.contains("torsion")) {
            if (!h.at("torsion").is_array())
                throw ParseError("homology torsion must be an array");
            for (const auto& t : h.at("torsion"))
                report.torsion.push_back(int_from_json(t));
        }
        m.homology = report;
    }
    if (j.contains("notes")) {
        if (!j.at("notes").is_array())
            throw ParseError("notes must be an array of strings");
        for (const auto& n : j.at("notes"))
            m.notes.push_back(require_string(n, "note"));
    }
    return m;
}

json classification_to_json(const ClassificationReport& r) {
    json walls = json::array();
    for (long w : r.walls)
        walls.push_back(w);
    return json{{"P", r.profile.positive_pairs},
                {"N", r.profile.negative_pairs},
                {"tag", type_label(r.profile.type)},
                {"positive_axis",
                 json{{"distinct", r.positive_axis_roots.distinct},
                      {"with_multiplicity", r.positive_axis_roots.with_multiplicity}}},
                {"negative_axis",
                 json{{"distinct", r.negative_axis_roots.distinct},
                      {"with_multiplicity", r.negative_axis_roots.with_multiplicity}}},
                {"wall_bound", r.wall_bound},
                {"walls", walls}};
}

json audit_to_json(const AlexanderAudit& a) {
    return json{{"integer_coefficients", a.integer_coefficients},
                {"monic_degree", a.monic_degree},
                {"palindromic", a.palindromic},
                {"value_at_one", entry_to_json(a.value_at_one)},
                {"unit_at_one", a.unit_at_one},
                {"all_pass", a.all_pass()}};
}

json distinguish_to_json(const DistinguishReport& d) {
    json out{{"order", d.order}, {"equal", d.equal}};
    if (!d.equal) {
        out["first_difference"] = d.first_difference;
        out["left"] = rat_to_string(d.left);
        out["right"] = rat_to_string(d.right);
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        std::string msg = e.what();
        for (auto& ch : msg)
            if (ch == '\n')
                ch = ' ';
        throw ParseError("invalid JSON in " + path + ": " + msg);
    }
}

}  // namespace gromzeta::io
