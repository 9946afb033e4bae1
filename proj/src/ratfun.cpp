#include "gromzeta/ratfun.hpp"

#include <utility>

#include "gromzeta/errors.hpp"

namespace gromzeta {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat c = den_.coeff(0);
    if (c == 0)
        throw DomainError("rational function denominator vanishes at t = 0");
    num_ = num_.scaled(Rat(1) / c);
    den_ = den_.scaled(Rat(1) / c);
}

RationalFunction RationalFunction::one() {
    return from_polynomial(Polynomial::one());
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::one());
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw DomainError("division by the zero rational function");
    if (o.num_.coeff(0) == 0)
        throw DomainError("division by a rational function vanishing at t = 0");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e >= 0)
        return RationalFunction(num_.pow(static_cast<unsigned long>(e)),
                                den_.pow(static_cast<unsigned long>(e)));
    if (num_.is_zero()) throw DomainError("negative power of the zero rational function");
    if (num_.coeff(0) == 0)
        throw DomainError("negative power of a rational function vanishing at t = 0");
    unsigned long k = static_cast<unsigned long>(-e);
    return RationalFunction(den_.pow(k), num_.pow(k));
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

TruncatedSeries ratfun_expand(const RationalFunction& r, int order) {
    TruncatedSeries num = TruncatedSeries::from_polynomial(r.numerator(), order);
    TruncatedSeries den = TruncatedSeries::from_polynomial(r.denominator(), order);
    return num * den.inverse();
}

}  // namespace gromzeta
