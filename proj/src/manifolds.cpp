#include "gromzeta/manifolds.hpp"

#include <algorithm>
#include <utility>

#include "gromzeta/errors.hpp"
#include "gromzeta/graded.hpp"

namespace gromzeta {

std::string completeness_label(Completeness c) {
    switch (c) {
        case Completeness::Full: return "full";
        case Completeness::Partial: return "partial";
        case Completeness::PartialWithSwNote: return "partial_with_sw_note";
    }
    throw InternalError("unhandled completeness value");
}

Completeness completeness_from_label(const std::string& s) {
    if (s == "full") return Completeness::Full;
    if (s == "partial") return Completeness::Partial;
    if (s == "partial_with_sw_note") return Completeness::PartialWithSwNote;
    throw ParseError("unknown completeness '" + s + "'");
}

namespace {

int completeness_rank(Completeness c) {
    switch (c) {
        case Completeness::Partial: return 0;
        case Completeness::PartialWithSwNote: return 1;
        case Completeness::Full: return 2;
    }
    throw InternalError("unhandled completeness value");
}

Polynomial one_minus_t() {
    return Polynomial(std::vector<Rat>{Rat(1), Rat(-1)});
}

void require_surface_monodromy(const Matrix& f, long genus, JConvention convention) {
    if (genus < 1) throw ValidationError("surface genus must be >= 1");
    if (!f.is_integral()) throw ValidationError("monodromy must have integer entries");
    if (!f.is_square() || f.rows() != 2 * genus)
        throw ValidationError("monodromy must be 2g x 2g for the declared genus");
    if (!symplectic_check(f, convention))
        throw ValidationError("monodromy does not preserve the intersection form");
}

}  // namespace

HomologyReport mapping_torus_homology(const Matrix& f) {
    if (!f.is_integral() || !f.is_square())
        throw ValidationError("monodromy must be a square integer matrix");
    CokernelDecomposition cok = cokernel_decomposition(Matrix::identity(f.rows()) - f);
    HomologyReport h;
    h.b1 = cok.free_rank + 2;
    h.torsion = cok.torsion;
    return h;
}

ManifoldInvariant mapping_torus(const Matrix& f, long genus, const std::string& name,
                                JConvention convention) {
    require_surface_monodromy(f, genus, convention);

    ManifoldInvariant m;
    m.name = name.empty() ? "X_f" : name;
    m.complex_dim = 2;
    m.fiber_genus = 1;  // the section torus represents the distinguished class
    m.kappa_multiple = 2 * genus - 2;

    Polynomial num = charpoly_rev(f);
    Polynomial den = one_minus_t() * one_minus_t();
    m.series = RationalFunction(num, den);

    Rat gate = det_exact(Matrix::identity(f.rows()) - f);
    if (gate == 1 || gate == -1) {
        m.completeness = Completeness::Full;
    } else {
        m.completeness = Completeness::Partial;
        m.notes.push_back("det(I - f) = " + rat_to_string(gate) +
                          "; only the section-class series is certified");
    }
    m.sw_equal = false;
    m.homology = mapping_torus_homology(f);
    return m;
}

ManifoldInvariant elliptic_surface(long n) {
    if (n < 0) throw DomainError("elliptic surface index must be >= 0");
    ManifoldInvariant m;
    m.name = "E(" + std::to_string(n) + ")";
    m.complex_dim = 2;
    m.fiber_genus = 1;
    m.kappa_multiple = n - 2;
    m.series = RationalFunction::from_polynomial(one_minus_t()).pow(n - 2);
    m.completeness = n >= 2 ? Completeness::Full : Completeness::Partial;
    m.sw_equal = n >= 2;
    if (n == 0) m.notes.push_back("formal record for S^2 x T^2");
    return m;
}

ManifoldInvariant fiber_sum(const ManifoldInvariant& a, const ManifoldInvariant& b) {
    if (a.complex_dim != 2 || b.complex_dim != 2)
        throw DomainError("fiber sum is defined for four-manifold records");
    if (a.fiber_genus != b.fiber_genus)
        throw IncompatibleFibersError(
            "cannot glue fibers of genus " + std::to_string(a.fiber_genus) + " and " +
            std::to_string(b.fiber_genus));

    ManifoldInvariant m;
    m.name = a.name + " # " + b.name;
    m.complex_dim = 2;
    m.fiber_genus = a.fiber_genus;
    m.kappa_multiple = a.kappa_multiple + b.kappa_multiple + 2;
    RationalFunction square =
        RationalFunction::from_polynomial(one_minus_t() * one_minus_t());
    m.series = square * a.series * b.series;
    m.completeness = completeness_rank(a.completeness) <= completeness_rank(b.completeness)
                         ? a.completeness
                         : b.completeness;
    m.sw_equal = false;
    return m;
}

ManifoldInvariant knot_surgery(const ManifoldInvariant& z, const Matrix& f,
                               const std::string& label, JConvention convention) {
    if (z.complex_dim != 2)
        throw DomainError("knot surgery is defined for four-manifold records");
    if (z.fiber_genus != 1)
        throw IncompatibleFibersError("knot surgery glues along a torus; the base record's "
                                      "distinguished class must have genus 1");
    if (f.rows() % 2 != 0)
        throw ValidationError("monodromy must have even dimension >= 2");
    require_surface_monodromy(f, f.rows() / 2, convention);
    Rat gate = det_exact(Matrix::identity(f.rows()) - f);
    if (gate != 1 && gate != -1)
        throw HypothesisError("knot surgery needs det(I - f) = +-1, got " +
                              rat_to_string(gate));

    ManifoldInvariant m;
    if (!z.name.empty() && z.name.back() == ')')
        m.name = z.name.substr(0, z.name.size() - 1) + "," + label + ")";
    else
        m.name = z.name + "(" + label + ")";
    m.complex_dim = 2;
    m.fiber_genus = z.fiber_genus;
    m.kappa_multiple = z.kappa_multiple + f.rows();  // += 2g
    m.series = z.series * RationalFunction::from_polynomial(charpoly_rev(f));

    ManifoldInvariant via_sum = fiber_sum(z, mapping_torus(f, f.rows() / 2, "X", convention));
    if (!(via_sum.series == m.series) || via_sum.kappa_multiple != m.kappa_multiple)
        throw InternalError("knot surgery disagrees with the fiber-sum route");

    m.completeness = z.completeness == Completeness::Full ? Completeness::Full
                                                          : Completeness::PartialWithSwNote;
    m.sw_equal = z.completeness == Completeness::Full;
    return m;
}

ManifoldInvariant knot_surgery(const ManifoldInvariant& z, const FiberedKnot& k) {
    ManifoldInvariant m = knot_surgery(z, k.monodromy, k.name);
    m.notes.push_back("homotopy equivalent to " + z.name);
    if (!k.note.empty()) m.notes.push_back(k.name + ": " + k.note);
    return m;
}

ManifoldInvariant sphere_product(const ManifoldInvariant& m, long euler) {
    ManifoldInvariant out;
    out.name = euler == 2 ? m.name + " x S^2"
                          : m.name + " x Y(chi=" + std::to_string(euler) + ")";
    out.complex_dim = m.complex_dim + 1;
    out.fiber_genus = m.fiber_genus;
    out.kappa_multiple = m.kappa_multiple;
    out.series = m.series.pow(euler);
    out.completeness = Completeness::Partial;
    out.sw_equal = false;
    out.notes.push_back("genus-1 partial series");
    out.notes.push_back("kappa multiple carried over from " + m.name +
                        "; not a multiple of the fiber class upstairs");
    return out;
}

bool adjunction_check(long kappa_dot_a, long genus, long self_intersection) {
    return kappa_dot_a == 2 * (genus - 1) - self_intersection;
}

DistinguishReport distinguish(const ManifoldInvariant& a, const ManifoldInvariant& b,
                              int order) {
    if (order < 0) throw DomainError("comparison order must be >= 0");
    DistinguishReport report;
    report.order = order;
    TruncatedSeries sa = ratfun_expand(a.series, order);
    TruncatedSeries sb = ratfun_expand(b.series, order);
    for (int k = 0; k <= order; ++k) {
        if (sa.coeff(k) != sb.coeff(k)) {
            report.equal = false;
            report.first_difference = k;
            report.left = sa.coeff(k);
            report.right = sb.coeff(k);
            break;
        }
    }
    return report;
}

}  // namespace gromzeta
