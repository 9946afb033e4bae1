#include "gromzeta/rational.hpp"

#include <cctype>

#include "gromzeta/errors.hpp"

namespace gromzeta {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

Int int_from_token(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw ParseError("empty integer token in rational literal");
    try {
        return Int(t, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid integer token '" + tok + "' in rational literal");
    }
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string body = s.substr(b, e - b);
    if (body.empty()) throw ParseError("empty rational literal");

    std::size_t slash = body.find('/');
    if (slash == std::string::npos) return Rat(int_from_token(body));
    if (body.find('/', slash + 1) != std::string::npos)
        throw ParseError("rational literal '" + body + "' has more than one '/'");

    Int num = int_from_token(body.substr(0, slash));
    Int den = int_from_token(body.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal '" + body + "' has zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool fits_json_number(const Int& v) {
    static const Int bound = Int(1) << 53;
    return abs(v) < bound;
}

}  // namespace gromzeta
