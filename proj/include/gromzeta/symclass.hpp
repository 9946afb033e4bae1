#pragma once

#include <map>
#include <string>
#include <vector>

#include "gromzeta/linalg.hpp"
#include "gromzeta/matrix.hpp"
#include "gromzeta/ratfun.hpp"
#include "gromzeta/series.hpp"
#include "gromzeta/sturm.hpp"

namespace gromzeta {

// Residual type of a symplectic matrix off the walls, read from the parities
// of its real eigenvalue-pair counts. Mixed (both parities odd) can occur
// from dimension 4 up and carries the sign pattern (-1)^m.
enum class SymplecticType { Elliptic, Hyperbolic, NegHyperbolic, Mixed };

std::string type_label(SymplecticType t);  // "E", "H", "H'", "mixed"

struct TypeProfile {
    long positive_pairs = 0;  // pairs {lambda, 1/lambda}, lambda > 0, with multiplicity
    long negative_pairs = 0;  // pairs with lambda < 0
    SymplecticType type = SymplecticType::Elliptic;
};

struct ClassificationReport {
    TypeProfile profile;
    // Raw counts of real characteristic roots on each half axis; the pair
    // counts above are these halved.
    RootCount positive_axis_roots;
    RootCount negative_axis_roots;
    long wall_bound = 0;
    std::vector<long> walls;  // m <= wall_bound with det(A^m - I) = 0
};

// Classifies a symplectic matrix by Sturm root counting on det(tI - A):
// P = (real roots in (0, inf), with multiplicity)/2, N likewise on
// (-inf, 0). Requires the matrix off the wall W_1 (det(A - I) != 0); wall
// memberships up to wall_bound are reported, not fatal.
ClassificationReport type_profile(const Matrix& a, long wall_bound = 24,
                                  JConvention convention = JConvention::Interleaved);

// sgn det(A^m - I) computed exactly; m on a wall raises WallError.
int sign_power_exact(const Matrix& a, long m);

// The residual-type prediction (-1)^(P + N(m+1)): +1 for E, -1 for H,
// -(-1)^m for H', (-1)^m for Mixed. Valid off the walls.
int sign_power_predicted(const TypeProfile& profile, long m);

// All m in [1, max_m] with det(A^m - I) = 0.
std::vector<long> wall_memberships(const Matrix& a, long max_m);

// Closed-orbit census of a flow, bucketed by minimal period.
struct OrbitCounts {
    Int elliptic{0};
    Int hyperbolic{0};
    Int neg_hyperbolic{0};
};

class OrbitData {
  public:
    OrbitData() = default;

    // Periods must be fresh, >= 1, with non-negative counts.
    void add(long period, OrbitCounts counts);

    const std::map<long, OrbitCounts>& by_period() const { return counts_; }
    long max_period() const;

  private:
    std::map<long, OrbitCounts> counts_;
};

// Local zeta factor of one closed orbit: 1/(1-t^k) for elliptic, 1-t^k for
// hyperbolic, 1+t^k for negative hyperbolic.
RationalFunction orbit_factor(SymplecticType type, long period);

// |det(A^n - I)|, the fixed points of the n-th iterate of a torus
// automorphism (2x2 integer, det 1). n on a wall (det(A^n - I) = 0) raises
// WallError.
Int toral_fixed_points(const Matrix& a, long n);

// Orbit counts of every minimal period through max_period, by Moebius
// inversion of the fixed-point counts. Requires a hyperbolic automorphism.
// Positive trace makes every orbit hyperbolic; negative trace makes odd
// periods negative hyperbolic and leaves even periods hyperbolic, since an
// orbit of minimal period k is linearized by A^k.
OrbitData toral_orbit_data(const Matrix& a, long max_period);

// Product of the local factors of all listed orbits, truncated at the order.
TruncatedSeries zeta_from_orbits(const OrbitData& data, int order);

}  // namespace gromzeta
