#pragma once

#include <string>
#include <vector>

#include "gromzeta/linalg.hpp"
#include "gromzeta/matrix.hpp"
#include "gromzeta/polynomial.hpp"

namespace gromzeta {

// A fibered knot presented by the monodromy action on the homology of its
// genus-g fiber.
struct FiberedKnot {
    std::string name;
    long genus = 0;
    Matrix monodromy;   // 2g x 2g, integer, preserves the intersection form
    std::string note;   // free-form remark carried into reports
};

// Validates the presentation: genus >= 1 and a 2g x 2g integer matrix with
// determinant 1 preserving the intersection form.
FiberedKnot make_fibered_knot(std::string name, long genus, Matrix monodromy,
                              std::string note = "",
                              JConvention convention = JConvention::Interleaved);

// Built-in table: "trefoil", "figure8". Unknown names raise LookupError.
FiberedKnot builtin_knot(const std::string& name);
std::vector<std::string> builtin_knot_names();

// Alexander polynomial det(I - t * monodromy); degree exactly 2g.
Polynomial alexander(const FiberedKnot& k);

// Independent checks of the classical constraints on a genus-g Alexander
// polynomial. One verdict per field so failures stay attributable; the audit
// reports and never throws.
struct AlexanderAudit {
    bool integer_coefficients = false;
    bool monic_degree = false;  // degree 2g with constant and leading term 1
    bool palindromic = false;   // c_i == c_{2g-i}
    Rat value_at_one;
    bool unit_at_one = false;  // A(1) in {+1, -1}
    bool all_pass() const {
        return integer_coefficients && monic_degree && palindromic && unit_at_one;
    }
};

AlexanderAudit alexander_audit(const Polynomial& p, long genus);

}  // namespace gromzeta
