#include "gromzeta/knots.hpp"

#include <utility>

#include "gromzeta/errors.hpp"

namespace gromzeta {

FiberedKnot make_fibered_knot(std::string name, long genus, Matrix monodromy, std::string note,
                              JConvention convention) {
    if (genus < 1) throw ValidationError("fibered knot genus must be >= 1");
    if (!monodromy.is_integral())
        throw ValidationError("knot monodromy must have integer entries");
    if (!monodromy.is_square() || monodromy.rows() != 2 * genus)
        throw ValidationError("knot monodromy must be 2g x 2g for the declared genus");
    if (det_exact(monodromy) != 1)
        throw ValidationError("knot monodromy must have determinant 1");
    if (!symplectic_check(monodromy, convention))
        throw ValidationError("knot monodromy does not preserve the intersection form");
    return FiberedKnot{std::move(name), genus, std::move(monodromy), std::move(note)};
}

FiberedKnot builtin_knot(const std::string& name) {
    if (name == "trefoil")
        return make_fibered_knot(
            "trefoil", 1, Matrix{{1, 1}, {-1, 0}},
            "some tables print t^2 - t - 1; det(I - tA) for this monodromy gives "
            "1 - t + t^2, the classical value");
    if (name == "figure8")
        return make_fibered_knot("figure8", 1, Matrix{{2, 1}, {1, 1}});
    throw LookupError("unknown built-in knot '" + name + "'");
}

std::vector<std::string> builtin_knot_names() { return {"figure8", "trefoil"}; }

Polynomial alexander(const FiberedKnot& k) {
    Polynomial p = charpoly_rev(k.monodromy);
    if (p.degree() != 2 * k.genus)
        throw InternalError("Alexander polynomial degree dropped below 2g");
    return p;
}

AlexanderAudit alexander_audit(const Polynomial& p, long genus) {
    // Genus 0 is allowed so degree-zero numerators of surgery-free records
    // can be audited against the unknot's polynomial.
    if (genus < 0) throw DomainError("audit genus must be >= 0");
    AlexanderAudit audit;
    audit.integer_coefficients = p.is_integral();
    const long d = 2 * genus;
    audit.monic_degree =
        p.degree() == d && p.coeff(0) == 1 && p.coeff(static_cast<int>(d)) == 1;
    audit.palindromic = true;
    for (long i = 0; i <= d; ++i)
        if (p.coeff(static_cast<int>(i)) != p.coeff(static_cast<int>(d - i))) {
            audit.palindromic = false;
            break;
        }
    audit.value_at_one = p(Rat(1));
    audit.unit_at_one = audit.value_at_one == 1 || audit.value_at_one == -1;
    return audit;
}

}  // namespace gromzeta
