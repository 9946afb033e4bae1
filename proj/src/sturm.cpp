#include "gromzeta/sturm.hpp"

#include <vector>

#include "gromzeta/errors.hpp"

namespace gromzeta {

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& q) {
    std::vector<Polynomial> chain{q, q.derivative()};
    while (!chain.back().is_zero()) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        chain.push_back(-(a.divmod(b).second));
    }
    chain.pop_back();
    return chain;
}

int sign_at(const Polynomial& p, const Rat& x) { return sgn(p(x)); }

int sign_at_plus_infinity(const Polynomial& p) { return sgn(p.leading()); }

int sign_at_minus_infinity(const Polynomial& p) {
    int s = sgn(p.leading());
    return p.degree() % 2 == 0 ? s : -s;
}

long variations(const std::vector<Polynomial>& chain, const std::optional<Rat>& bound,
                bool lower_end) {
    long count = 0;
    int prev = 0;
    for (const Polynomial& p : chain) {
        int s;
        if (bound)
            s = sign_at(p, *bound);
        else
            s = lower_end ? sign_at_minus_infinity(p) : sign_at_plus_infinity(p);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// q squarefree and nonconstant. Finite endpoints are deflated (q squarefree
// means a single linear division suffices), keeping Sturm's hypothesis that
// neither endpoint is a root.
long distinct_roots_squarefree(Polynomial q, const RootInterval& iv) {
    for (const std::optional<Rat>& bound : {iv.lower, iv.upper}) {
        if (!bound) continue;
        if (q(*bound) == 0) {
            Polynomial linear(std::vector<Rat>{-*bound, Rat(1)});
            q = q.divmod(linear).first;
        }
    }
    if (q.degree() < 1) return 0;
    std::vector<Polynomial> chain = sturm_chain(q);
    return variations(chain, iv.lower, true) - variations(chain, iv.upper, false);
}

}  // namespace

RootCount sturm_root_count(const Polynomial& p, const RootInterval& interval) {
    if (p.is_zero()) throw DomainError("root counting for the zero polynomial");
    if (interval.lower && interval.upper && !(*interval.lower < *interval.upper))
        throw DomainError("root counting on an empty interval");
    RootCount out;
    if (p.degree() < 1) return out;
    std::vector<Polynomial> parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        long d = distinct_roots_squarefree(parts[i], interval);
        out.distinct += d;
        out.with_multiplicity += static_cast<long>(i + 1) * d;
    }
    return out;
}

}  // namespace gromzeta
