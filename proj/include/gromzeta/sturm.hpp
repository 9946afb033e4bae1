#pragma once

#include <optional>

#include "gromzeta/polynomial.hpp"

namespace gromzeta {

// Open interval of the real line; an unset bound is infinite.
struct RootInterval {
    std::optional<Rat> lower;
    std::optional<Rat> upper;

    static RootInterval real_line() { return {}; }
    static RootInterval positive_axis() { return {Rat(0), std::nullopt}; }
    static RootInterval negative_axis() { return {std::nullopt, Rat(0)}; }
    static RootInterval open(const Rat& a, const Rat& b) { return {a, b}; }
};

struct RootCount {
    long distinct = 0;
    long with_multiplicity = 0;
};

// Real roots of p inside the open interval, counted by Sturm chains on the
// squarefree Yun parts; finite endpoints that happen to be roots are deflated
// away first, so they are never counted. p = 0 is rejected.
RootCount sturm_root_count(const Polynomial& p, const RootInterval& interval);

}  // namespace gromzeta
