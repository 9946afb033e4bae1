#include "gromzeta/symclass.hpp"

#include <utility>

#include "gromzeta/errors.hpp"

namespace gromzeta {

std::string type_label(SymplecticType t) {
    switch (t) {
        case SymplecticType::Elliptic: return "E";
        case SymplecticType::Hyperbolic: return "H";
        case SymplecticType::NegHyperbolic: return "H'";
        case SymplecticType::Mixed: return "mixed";
    }
    throw InternalError("unhandled symplectic type");
}

namespace {

long halved(const RootCount& count, const char* side) {
    if (count.with_multiplicity % 2 != 0)
        throw InternalError(std::string("odd real root count on the ") + side +
                            " axis for a symplectic matrix off W_1");
    return count.with_multiplicity / 2;
}

}  // namespace

ClassificationReport type_profile(const Matrix& a, long wall_bound, JConvention convention) {
    if (!symplectic_check(a, convention))
        throw ValidationError("matrix does not preserve the symplectic form");
    if (wall_bound < 1) throw DomainError("wall bound must be >= 1");
    if (det_exact(a - Matrix::identity(a.rows())) == 0) throw WallError(1);

    // Real eigenvalues come in pairs {lambda, 1/lambda} on one half axis, so
    // half the root count of det(tI - A) on that axis counts the pairs.
    Polynomial charpoly = reversed(charpoly_rev(a), a.rows());
    ClassificationReport report;
    report.positive_axis_roots = sturm_root_count(charpoly, RootInterval::positive_axis());
    report.negative_axis_roots = sturm_root_count(charpoly, RootInterval::negative_axis());
    report.profile.positive_pairs = halved(report.positive_axis_roots, "positive");
    report.profile.negative_pairs = halved(report.negative_axis_roots, "negative");

    const bool p_odd = report.profile.positive_pairs % 2 != 0;
    const bool n_odd = report.profile.negative_pairs % 2 != 0;
    if (p_odd && n_odd)
        report.profile.type = SymplecticType::Mixed;
    else if (p_odd)
        report.profile.type = SymplecticType::Hyperbolic;
    else if (n_odd)
        report.profile.type = SymplecticType::NegHyperbolic;
    else
        report.profile.type = SymplecticType::Elliptic;

    report.wall_bound = wall_bound;
    report.walls = wall_memberships(a, wall_bound);
    return report;
}

int sign_power_exact(const Matrix& a, long m) {
    if (!a.is_square()) throw DimensionError("sign of det(A^m - I) needs a square matrix");
    if (m < 1) throw DomainError("power must be >= 1");
    Rat d = det_exact(a.pow(static_cast<unsigned long>(m)) - Matrix::identity(a.rows()));
    int s = sgn(d);
    if (s == 0) throw WallError(static_cast<int>(m));
    return s;
}

int sign_power_predicted(const TypeProfile& profile, long m) {
    if (m < 1) throw DomainError("power must be >= 1");
    long exponent = profile.positive_pairs + profile.negative_pairs * (m + 1);
    return exponent % 2 == 0 ? 1 : -1;
}

std::vector<long> wall_memberships(const Matrix& a, long max_m) {
    if (!a.is_square()) throw DimensionError("wall membership needs a square matrix");
    if (max_m < 1) throw DomainError("wall bound must be >= 1");
    std::vector<long> walls;
    Matrix p = a;
    const Matrix id = Matrix::identity(a.rows());
    for (long m = 1; m <= max_m; ++m) {
        if (det_exact(p - id) == 0) walls.push_back(m);
        if (m < max_m) p = p * a;
    }
    return walls;
}

void OrbitData::add(long period, OrbitCounts counts) {
    if (period < 1) throw ValidationError("orbit period must be >= 1");
    if (counts.elliptic < 0 || counts.hyperbolic < 0 || counts.neg_hyperbolic < 0)
        throw ValidationError("orbit counts must be non-negative");
    if (!counts_.emplace(period, std::move(counts)).second)
        throw ValidationError("duplicate orbit period " + std::to_string(period));
}

long OrbitData::max_period() const {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

RationalFunction orbit_factor(SymplecticType type, long period) {
    if (period < 1) throw DomainError("orbit period must be >= 1");
    Polynomial tk = Polynomial::monomial(Rat(1), static_cast<int>(period));
    switch (type) {
        case SymplecticType::Elliptic:
            return RationalFunction(Polynomial::one(), Polynomial::one() - tk);
        case SymplecticType::Hyperbolic:
            return RationalFunction::from_polynomial(Polynomial::one() - tk);
        case SymplecticType::NegHyperbolic:
            return RationalFunction::from_polynomial(Polynomial::one() + tk);
        case SymplecticType::Mixed:
            break;
    }
    throw DomainError("no local orbit factor for the mixed type");
}

namespace {

void require_toral(const Matrix& a) {
    if (!a.is_square() || a.rows() != 2)
        throw DomainError("torus automorphism must be 2x2");
    if (!a.is_integral()) throw DomainError("torus automorphism must have integer entries");
    if (det_exact(a) != 1) throw DomainError("torus automorphism must have determinant 1");
}

}  // namespace

Int toral_fixed_points(const Matrix& a, long n) {
    require_toral(a);
    if (n < 1) throw DomainError("iterate must be >= 1");
    Rat d = det_exact(a.pow(static_cast<unsigned long>(n)) - Matrix::identity(2));
    if (d == 0) throw WallError(static_cast<int>(n));
    return abs(d.get_num());
}

OrbitData toral_orbit_data(const Matrix& a, long max_period) {
    require_toral(a);
    Rat tr = a.trace();
    if (tr <= 2 && tr >= -2)
        throw DomainError("orbit counting needs a hyperbolic torus automorphism");
    if (max_period < 1) throw DomainError("maximum period must be >= 1");
    const bool positive = tr > 0;

    std::vector<Int> fixed(static_cast<std::size_t>(max_period) + 1, Int(0));
    Matrix p = a;
    const Matrix id = Matrix::identity(2);
    for (long n = 1; n <= max_period; ++n) {
        Rat d = det_exact(p - id);
        fixed[static_cast<std::size_t>(n)] = abs(d.get_num());
        if (n < max_period) p = p * a;
    }

    OrbitData data;
    for (long k = 1; k <= max_period; ++k) {
        Int sum(0);
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) sum += Int(moebius(k / d)) * fixed[static_cast<std::size_t>(d)];
        if (sum < 0 || sum % k != 0)
            throw InternalError("orbit count inversion produced a non-count");
        Int orbits = sum / k;
        OrbitCounts counts;
        // A period-k orbit is linearized by A^k, whose eigenvalues are
        // positive when k is even regardless of the sign of trace(A).
        if (positive || k % 2 == 0)
            counts.hyperbolic = orbits;
        else
            counts.neg_hyperbolic = orbits;
        data.add(k, counts);
    }
    return data;
}

TruncatedSeries zeta_from_orbits(const OrbitData& data, int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    TruncatedSeries z = TruncatedSeries::constant(Rat(1), order);
    for (const auto& [period, counts] : data.by_period()) {
        if (period > order) break;
        Polynomial tk = Polynomial::monomial(Rat(1), static_cast<int>(period));
        Rat exponent = Rat(counts.hyperbolic) - Rat(counts.elliptic);
        if (exponent != 0) {
            TruncatedSeries minus =
                TruncatedSeries::from_polynomial(Polynomial::one() - tk, order);
            z = z * series_pow(minus, exponent);
        }
        if (counts.neg_hyperbolic != 0) {
            TruncatedSeries plus =
                TruncatedSeries::from_polynomial(Polynomial::one() + tk, order);
            z = z * series_pow(plus, Rat(counts.neg_hyperbolic));
        }
    }
    return z;
}

}  // namespace gromzeta
