#pragma once

#include <string>

#include "gromzeta/polynomial.hpp"
#include "gromzeta/series.hpp"

namespace gromzeta {

// Quotient of polynomials kept in canonical form: numerator and denominator
// coprime and the denominator normalized to constant term 1, so structural
// equality is mathematical equality and every value expands at t = 0.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}  // zero
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction one();
    static RationalFunction from_polynomial(Polynomial p);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_polynomial() const { return den_ == Polynomial::one(); }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    // Negative exponents need a numerator with nonzero constant term.
    RationalFunction pow(long e) const;

    bool operator==(const RationalFunction& o) const = default;

    std::string str(const std::string& var = "t") const;

  private:
    Polynomial num_, den_;
};

// Taylor coefficients at t = 0 through the requested order.
TruncatedSeries ratfun_expand(const RationalFunction& r, int order);

}  // namespace gromzeta
