#pragma once

#include <gmpxx.h>

#include <string>

namespace gromzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" in base 10, optional leading '+' or '-', surrounding
// whitespace ignored. Throws ParseError on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// True when |v| < 2^53, i.e. the value survives a round trip through a
// double-backed JSON number.
bool fits_json_number(const Int& v);

}  // namespace gromzeta
