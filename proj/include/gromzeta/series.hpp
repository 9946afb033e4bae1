#pragma once

#include <string>
#include <vector>

#include "gromzeta/polynomial.hpp"
#include "gromzeta/rational.hpp"

namespace gromzeta {

// Power series over Q truncated at a fixed order: coefficients of t^0..t^N
// are stored, everything above is unknown. Arithmetic between different
// orders truncates to the smaller one, and equality compares coefficients
// through the common order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);  // the zero series
    TruncatedSeries(int order, std::vector<Rat> coeffs);

    static TruncatedSeries constant(const Rat& c, int order);
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return order_; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    const Rat& coeff(int k) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Rat& c) const;

    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    // Restriction to a smaller order.
    TruncatedSeries truncated(int new_order) const;

    // t -> t^k for k >= 1, truncated back to the same order.
    TruncatedSeries substitute_power(int k) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const;

  private:
    int order_;
    std::vector<Rat> coeffs_;  // size order_ + 1
};

// exp of a series with zero constant term, via the derivative recurrence
// b' = a'b.
TruncatedSeries series_exp(const TruncatedSeries& a);

// log of a series with constant term 1, via b' = a'/a.
TruncatedSeries series_log(const TruncatedSeries& a);

// a^r = exp(r log a) for rational r; requires constant term 1.
TruncatedSeries series_pow(const TruncatedSeries& a, const Rat& r);

// Moebius function by trial division; m >= 1.
int moebius(long m);

// F(t) = exp(sum_{m>=1} mu(m) t^m), the factor whose Euler product
// prod_{k>=1} F(t^k) collapses to e^t.
TruncatedSeries weight_factor(int order);

}  // namespace gromzeta
