#pragma once

#include <stdexcept>
#include <string>

namespace qsl2 {

/// Base class for all qsl2 errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by the zero polynomial / rational function.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A rational function has no expansion in ascending powers of q^{-1}.
struct NotExpandable : Error {
    using Error::Error;
};

/// A u-polynomial left Q(q)[u^2] where boundedness was required.
struct Unbounded : Error {
    using Error::Error;
};

/// A symbol E^(a)F^(b)1_m / F^(b)E^(a)1_m that is not a canonical basis element.
struct OrientationInvalid : Error {
    using Error::Error;
};

/// Two elements/vectors from different weight blocks were combined.
struct WeightMismatch : Error {
    using Error::Error;
};

/// Malformed textual/JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qsl2
