#include "gromzeta/polynomial.hpp"

#include <algorithm>

#include "gromzeta/errors.hpp"

namespace gromzeta {

Polynomial::Polynomial(const Rat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rat(constant)) {}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rat& c, int k) {
    if (k < 0) throw DomainError("monomial with negative exponent");
    if (c == 0) return Polynomial();
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat Polynomial::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

bool Polynomial::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

Rat Polynomial::operator()(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = Rat(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> s(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) s[k] += o.coeffs_[k];
    return Polynomial(std::move(s));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::scaled(const Rat& c) const {
    std::vector<Rat> s(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s[k] = c * coeffs_[k];
    return Polynomial(std::move(s));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> p(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(std::move(p));
}

Polynomial Polynomial::pow(unsigned long n) const {
    Polynomial result = Polynomial::one();
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quot(static_cast<std::size_t>(degree() - d.degree()) + 1, Rat(0));
    const Rat lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rat c = rem[static_cast<std::size_t>(k + d.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

Polynomial Polynomial::substitute_power(int k) const {
    if (k < 1) throw DomainError("substitution exponent must be >= 1");
    if (is_zero()) return *this;
    std::vector<Rat> s(static_cast<std::size_t>(degree()) * k + 1, Rat(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) s[j * k] = coeffs_[j];
    return Polynomial(std::move(s));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        Rat c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool negative = c < 0;
        Rat a = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mag = rat_to_string(a);
        if (k == 0) {
            out += mag;
        } else {
            if (a != 1) {
                out += mag;
                if (!is_integer(a)) out += " ";
            }
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
    std::vector<Polynomial> parts;
    Polynomial f = p.monic();
    if (f.degree() == 0) return parts;
    // Yun's algorithm over a field of characteristic zero.
    Polynomial fp = f.derivative();
    Polynomial a = poly_gcd(f, fp);
    Polynomial b = f.divmod(a).first;
    Polynomial c = fp.divmod(a).first;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial q = poly_gcd(b, d);
        parts.push_back(q);
        b = b.divmod(q).first;
        c = d.divmod(q).first;
        d = c - b.derivative();
    }
    while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
    return parts;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial out = Polynomial::one();
    for (const Polynomial& q : squarefree_decomposition(p)) out = out * q;
    return out;
}

Polynomial reversed(const Polynomial& p, int n) {
    if (n < 0) throw DomainError("reversal degree must be >= 0");
    if (p.degree() > n) throw DomainError("reversal degree below polynomial degree");
    std::vector<Rat> r(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) r[static_cast<std::size_t>(n - k)] = p.coeff(k);
    return Polynomial(std::move(r));
}

}  // namespace gromzeta
