#include "gromzeta/graded.hpp"

#include <string>
#include <utility>

#include "gromzeta/errors.hpp"
#include "gromzeta/linalg.hpp"

namespace gromzeta {

GradedMap::GradedMap(std::vector<Matrix> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw ValidationError("graded map with no degrees");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Matrix& m = maps_[k];
        if (!m.is_square())
            throw ValidationError("graded map degree " + std::to_string(k) + " is not square");
        if (!m.is_integral())
            throw ValidationError("graded map degree " + std::to_string(k) +
                                  " has non-integer entries");
    }
    if (maps_[0] != Matrix::identity(1))
        throw ValidationError("graded map degree 0 must be the 1x1 identity");
}

GradedMap GradedMap::surface(const Matrix& monodromy) {
    if (!monodromy.is_integral())
        throw ValidationError("surface monodromy must have integer entries");
    if (!monodromy.is_square() || monodromy.rows() < 2 || monodromy.rows() % 2 != 0)
        throw ValidationError("surface monodromy must be square of even dimension >= 2");
    if (det_exact(monodromy) != 1)
        throw ValidationError("surface monodromy must have determinant 1");
    return GradedMap({Matrix::identity(1), monodromy, Matrix::identity(1)});
}

const Matrix& GradedMap::map(int degree) const {
    if (degree < 0 || degree > top_degree())
        throw DimensionError("graded map has no degree " + std::to_string(degree));
    return maps_[static_cast<std::size_t>(degree)];
}

bool GradedMap::is_surface_shape() const {
    return top_degree() == 2 && maps_[0] == Matrix::identity(1) &&
           maps_[2] == Matrix::identity(1) && maps_[1].rows() >= 2 && maps_[1].rows() % 2 == 0;
}

namespace {

Int rat_to_int_exact(const Rat& r, const char* what) {
    if (!is_integer(r)) throw InternalError(std::string(what) + " is not an integer");
    return r.get_num();
}

}  // namespace

Int lefschetz(const GradedMap& g, long n) {
    if (n < 1) throw DomainError("Lefschetz number needs n >= 1");
    Rat sum(0);
    for (int k = 0; k <= g.top_degree(); ++k) {
        Rat t = power_trace(g.map(k), static_cast<unsigned long>(n));
        sum += (k % 2 == 0) ? t : -t;
    }
    return rat_to_int_exact(sum, "Lefschetz number");
}

std::vector<Int> lefschetz_sequence(const GradedMap& g, int n) {
    if (n < 0) throw DomainError("Lefschetz sequence length must be >= 0");
    std::vector<Rat> sums(static_cast<std::size_t>(n), Rat(0));
    for (int k = 0; k <= g.top_degree(); ++k) {
        const Matrix& m = g.map(k);
        Matrix p = m;
        for (int i = 1; i <= n; ++i) {
            Rat t = p.trace();
            sums[static_cast<std::size_t>(i - 1)] += (k % 2 == 0) ? t : -t;
            if (i < n) p = p * m;
        }
    }
    std::vector<Int> out;
    out.reserve(sums.size());
    for (const Rat& s : sums) out.push_back(rat_to_int_exact(s, "Lefschetz number"));
    return out;
}

RationalFunction zeta_det(const GradedMap& g) {
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (int k = 0; k <= g.top_degree(); ++k) {
        Polynomial p = charpoly_rev(g.map(k));
        if (k % 2 == 0)
            den = den * p;
        else
            num = num * p;
    }
    return RationalFunction(std::move(num), std::move(den));
}

TruncatedSeries zeta_trace(const GradedMap& g, int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    std::vector<Int> lef = lefschetz_sequence(g, order);
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = make_rat(lef[static_cast<std::size_t>(n - 1)], Int(n));
    return series_exp(TruncatedSeries(order, std::move(c)));
}

Int rt_section(const GradedMap& g, long m) {
    if (m < 1) throw DomainError("Taubes count needs m >= 1");
    Int total(0);
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        total += Int(d) * lefschetz(g, m / d);
    }
    return total;
}

TruncatedSeries gromov_section(const GradedMap& g, int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    TruncatedSeries product = TruncatedSeries::constant(Rat(1), order);
    if (order == 0) return product;
    TruncatedSeries f = weight_factor(order);
    std::vector<Int> lef = lefschetz_sequence(g, order);
    for (long m = 1; m <= order; ++m) {
        Int rt(0);
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) rt += Int(d) * lef[static_cast<std::size_t>(m / d - 1)];
        product = product * series_pow(f.substitute_power(static_cast<int>(m)),
                                       make_rat(rt, Int(m)));
    }
    return product;
}

long moduli_dimension(int n, long genus, long marked, long kappa_dot_a) {
    return 2 * (n - 3) * (1 - genus) - 2 * kappa_dot_a + 2 * marked;
}

GenusSolution degree_zero_genus(int n, long kappa_dot_a) {
    GenusSolution out;
    if (n == 3) {
        out.kind = kappa_dot_a == 0 ? GenusSolution::Kind::All : GenusSolution::Kind::None;
        return out;
    }
    // 0 = 2(n-3)(1-g) - 2 kappa.A, so g = 1 - kappa.A / (n-3).
    if (kappa_dot_a % (n - 3) != 0) return out;
    long g = 1 - kappa_dot_a / (n - 3);
    if (g < 0) return out;
    out.kind = GenusSolution::Kind::Unique;
    out.genus = g;
    return out;
}

}  // namespace gromzeta
