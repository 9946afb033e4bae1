#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gromzeta/rational.hpp"

namespace gromzeta {

// Univariate polynomial over Q. Coefficients are stored ascending, constant
// term first, with trailing zeros trimmed; the zero polynomial keeps an
// empty list and reports degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rat& constant);
    explicit Polynomial(long constant);
    explicit Polynomial(std::vector<Rat> coeffs);

    static Polynomial one() { return Polynomial(Rat(1)); }
    // c * t^k
    static Polynomial monomial(const Rat& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    Rat coeff(int k) const;  // zero outside the stored range
    Rat leading() const;     // zero for the zero polynomial
    bool is_integral() const;

    Rat operator()(const Rat& t) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned long n) const;

    // Euclidean division by d != 0: returns (q, r) with *this == q*d + r and
    // deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    Polynomial monic() const;  // zero stays zero

    // t -> t^k for k >= 1.
    Polynomial substitute_power(int k) const;

    bool operator==(const Polynomial& o) const = default;

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Rat> coeffs_;
    void trim();
};

// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Yun decomposition: p = leading * prod_i part[i-1]^i with the parts monic,
// squarefree and pairwise coprime (parts of absent multiplicity are 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// Product of the distinct monic irreducible factors.
Polynomial squarefree_part(const Polynomial& p);

// Coefficient reversal at declared degree n: t^n * p(1/t). Requires
// deg p <= n; lower-degree input picks up zero leading coefficients.
Polynomial reversed(const Polynomial& p, int n);

}  // namespace gromzeta
