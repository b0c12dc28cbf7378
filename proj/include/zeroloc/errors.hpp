#pragma once

#include <stdexcept>
#include <string>

namespace zeroloc {

// Base for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / domain errors.
struct InvalidTrinomialError : Error {
    using Error::Error;
};
struct CaseMismatchError : Error {
    using Error::Error;
};
struct DegreeZeroError : Error {
    using Error::Error;
};

// Solver / numerical errors.
struct NoConvergenceError : Error {
    using Error::Error;
};
struct CapacityExceededError : Error {
    using Error::Error;
};
struct ZeroOnContourError : Error {
    using Error::Error;
};
struct NonIntegerWindingError : Error {
    using Error::Error;
};
struct SingularZeroPresentError : Error {
    using Error::Error;
};

}  // namespace zeroloc
