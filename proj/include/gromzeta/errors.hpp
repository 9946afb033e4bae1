#pragma once

#include <stdexcept>
#include <string>

namespace gromzeta {

// Base class for rejected inputs and violated preconditions.
// The CLI maps these to exit status 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct LookupError : Error {
    using Error::Error;
};

struct HypothesisError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Fiber-sum inputs whose distinguished fibers cannot be glued.
struct IncompatibleFibersError : Error {
    using Error::Error;
};

// det(A^m - I) = 0: type and sign queries are undefined on the wall W_m.
struct WallError : Error {
    int m;
    explicit WallError(int wall_index)
        : Error("matrix lies on wall W_" + std::to_string(wall_index)), m(wall_index) {}
};

// A broken internal invariant, i.e. a bug rather than bad input.
// The CLI maps these to exit status 1.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gromzeta
