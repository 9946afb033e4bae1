#pragma once

#include <string>

#include "json.hpp"

#include "gromzeta/graded.hpp"
#include "gromzeta/knots.hpp"
#include "gromzeta/manifolds.hpp"
#include "gromzeta/matrix.hpp"
#include "gromzeta/polynomial.hpp"
#include "gromzeta/ratfun.hpp"
#include "gromzeta/series.hpp"
#include "gromzeta/symclass.hpp"

namespace gromzeta::io {

using json = nlohmann::json;

// Exact scalars serialize as JSON integers while they survive a double round
// trip (|v| < 2^53) and as "p/q" strings beyond that; readers accept both.
json entry_to_json(const Rat& r);
Rat entry_from_json(const json& j);
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const Matrix& m);      // {"rows": [[...], ...]}
json matrix_rows_json(const Matrix& m);    // bare [[...], ...]
// Accepts {"rows": [[...]]} or a bare rows array; at least 1x1, rectangular.
Matrix matrix_from_json(const json& j);
// Bare rows array; [] gives the 0x0 matrix when allow_empty is set.
Matrix matrix_from_rows(const json& j, bool allow_empty = false);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json ratfun_to_json(const RationalFunction& r);
RationalFunction ratfun_from_json(const json& j);

// {"top_degree": d, "maps": {"0": [[1]], ...}} with missing degrees read as
// 0x0, or the shortcut {"surface_monodromy": [[...]]}.
json graded_to_json(const GradedMap& g);
GradedMap graded_from_json(const json& j);

json knot_to_json(const FiberedKnot& k);
FiberedKnot knot_from_json(const json& j);

json orbits_to_json(const OrbitData& o);
OrbitData orbits_from_json(const json& j);

json homology_to_json(const HomologyReport& h);
json manifold_to_json(const ManifoldInvariant& m);
ManifoldInvariant manifold_from_json(const json& j);

json classification_to_json(const ClassificationReport& r);
json audit_to_json(const AlexanderAudit& a);
json distinguish_to_json(const DistinguishReport& d);

// Parses the file, mapping parse failures to ParseError.
json read_json_file(const std::string& path);

}  // namespace gromzeta::io
