#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gromzeta/knots.hpp"
#include "gromzeta/linalg.hpp"
#include "gromzeta/matrix.hpp"
#include "gromzeta/ratfun.hpp"

namespace gromzeta {

// Whether a record's series is the whole Gromov series or only the part
// supported on multiples of the distinguished class. The sw-note variant
// marks partial series that still beat the Seiberg-Witten data.
enum class Completeness { Full, Partial, PartialWithSwNote };

std::string completeness_label(Completeness c);
Completeness completeness_from_label(const std::string& s);

// First homology of a mapping-torus four-manifold: free part and torsion in
// a divisibility chain.
struct HomologyReport {
    long b1 = 0;
    std::vector<Int> torsion;
};

// A named manifold with its (full or partial) degree-zero Gromov series in
// the single variable of its distinguished square-zero class.
struct ManifoldInvariant {
    std::string name;
    int complex_dim = 2;
    long fiber_genus = 1;      // genus of the distinguished class representative
    long kappa_multiple = 0;   // canonical class = this multiple of the class
    RationalFunction series;
    Completeness completeness = Completeness::Partial;
    bool sw_equal = false;     // Seiberg-Witten series known to coincide
    std::optional<HomologyReport> homology;
    std::vector<std::string> notes;
};

// H_1 of the mapping torus over T^2: cokernel of (I - f) plus Z^2.
HomologyReport mapping_torus_homology(const Matrix& f);

// The four-manifold fibering over T^2 with monodromy f on a genus-g surface.
// Series det(I - t f)/(1-t)^2 in the section class; full exactly when
// det(I - f) = +-1 (the section class is then well defined and carries the
// whole series). f must be a 2g x 2g integer symplectic matrix.
ManifoldInvariant mapping_torus(const Matrix& f, long genus, const std::string& name = "",
                                JConvention convention = JConvention::Interleaved);

// The simply connected elliptic surface without multiple fibers, n >= 0;
// series (1-t)^(n-2) in the fiber class, full for n >= 2. E(0) is the formal
// record for S^2 x T^2.
ManifoldInvariant elliptic_surface(long n);

// Gluing along the distinguished fibers: series picks up a (1-t)^2 factor.
// Both inputs must be four-dimensional with matching fiber genus.
ManifoldInvariant fiber_sum(const ManifoldInvariant& a, const ManifoldInvariant& b);

// Surgery on z along a torus of square zero using the knot monodromy f:
// multiplies the series by det(I - t f). Requires det(I - f) = +-1; the
// result is homotopy equivalent to z. Equal to fiber_sum with the mapping
// torus of f, which is asserted internally.
ManifoldInvariant knot_surgery(const ManifoldInvariant& z, const Matrix& f,
                               const std::string& label = "f",
                               JConvention convention = JConvention::Interleaved);
ManifoldInvariant knot_surgery(const ManifoldInvariant& z, const FiberedKnot& k);

// Product with a surface of Euler characteristic chi (S^2 built in, chi = 2):
// the genus-1 partial series of the product is the chi-th power.
ManifoldInvariant sphere_product(const ManifoldInvariant& m, long euler);

// kappa.A = 2(g - 1) - A.A
bool adjunction_check(long kappa_dot_a, long genus, long self_intersection);

// Series comparison through a fixed order.
struct DistinguishReport {
    int order = 0;
    bool equal = true;
    int first_difference = -1;  // power where the expansions first differ
    Rat left, right;            // the differing coefficients
};

DistinguishReport distinguish(const ManifoldInvariant& a, const ManifoldInvariant& b,
                              int order);

}  // namespace gromzeta
