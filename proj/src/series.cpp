#include "gromzeta/series.hpp"

#include <algorithm>

#include "gromzeta/errors.hpp"

namespace gromzeta {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw DomainError("series order must be >= 0");
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1)
        throw DomainError("more series coefficients than the order admits");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k)
        s.coeffs_[static_cast<std::size_t>(k)] = p.coeff(k);
    return s;
}

const Rat& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw DomainError("series coefficient index beyond the truncation order");
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    TruncatedSeries s(n);
    for (int k = 0; k <= n; ++k)
        s.coeffs_[static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(k)] + o.coeffs_[static_cast<std::size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator-() const { return scaled(Rat(-1)); }

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries s(order_);
    for (int k = 0; k <= order_; ++k)
        s.coeffs_[static_cast<std::size_t>(k)] = c * coeffs_[static_cast<std::size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) {
        const Rat& a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            s.coeffs_[static_cast<std::size_t>(i + j)] +=
                a * o.coeffs_[static_cast<std::size_t>(j)];
    }
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) throw DomainError("series inverse needs a nonzero constant term");
    TruncatedSeries b(order_);
    b.coeffs_[0] = Rat(1) / coeffs_[0];
    for (int k = 1; k <= order_; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * b.coeffs_[static_cast<std::size_t>(k - j)];
        b.coeffs_[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
    }
    return b;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_)
        throw DomainError("series truncation order out of range");
    TruncatedSeries s(new_order);
    for (int k = 0; k <= new_order; ++k)
        s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return s;
}

TruncatedSeries TruncatedSeries::substitute_power(int k) const {
    if (k < 1) throw DomainError("substitution exponent must be >= 1");
    TruncatedSeries s(order_);
    for (int j = 0; static_cast<long>(j) * k <= order_; ++j)
        s.coeffs_[static_cast<std::size_t>(j) * k] = coeffs_[static_cast<std::size_t>(j)];
    return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    const int n = std::min(order_, o.order_);
    for (int k = 0; k <= n; ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != o.coeffs_[static_cast<std::size_t>(k)])
            return false;
    return true;
}

std::string TruncatedSeries::str(const std::string& var) const {
    Polynomial p(coeffs_);
    std::string body = p.str(var);
    return body + " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a.coeff(0) != 0) throw DomainError("series exp needs a zero constant term");
    const int n = a.order();
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    b[0] = 1;
    // b' = a'b gives (k+1) b_{k+1} = sum_{i+j=k} (i+1) a_{i+1} b_j.
    for (int k = 0; k < n; ++k) {
        Rat acc(0);
        for (int i = 0; i <= k; ++i)
            acc += Rat(i + 1) * a.coeff(i + 1) * b[static_cast<std::size_t>(k - i)];
        b[static_cast<std::size_t>(k + 1)] = acc / Rat(k + 1);
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw DomainError("series log needs constant term 1");
    const int n = a.order();
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    // b'a = a' gives (k+1) b_{k+1} = (k+1) a_{k+1} - sum_{i<k} (i+1) b_{i+1} a_{k-i}.
    for (int k = 0; k < n; ++k) {
        Rat acc = Rat(k + 1) * a.coeff(k + 1);
        for (int i = 0; i < k; ++i)
            acc -= Rat(i + 1) * b[static_cast<std::size_t>(i + 1)] * a.coeff(k - i);
        b[static_cast<std::size_t>(k + 1)] = acc / Rat(k + 1);
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries series_pow(const TruncatedSeries& a, const Rat& r) {
    if (a.coeff(0) != 1) throw DomainError("series power needs constant term 1");
    return series_exp(series_log(a).scaled(r));
}

int moebius(long m) {
    if (m < 1) throw DomainError("Moebius function needs m >= 1");
    int primes = 0;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        ++primes;
    }
    if (m > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

TruncatedSeries weight_factor(int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int m = 1; m <= order; ++m) c[static_cast<std::size_t>(m)] = moebius(m);
    return series_exp(TruncatedSeries(order, std::move(c)));
}

}  // namespace gromzeta
