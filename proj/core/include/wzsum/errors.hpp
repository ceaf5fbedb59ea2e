#pragma once

#include <stdexcept>
#include <string>

namespace wzsum {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rising factorial with negative index ran into a zero factor; the value is infinite.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Exact division by a zero value.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// The denominator of a rational shares a factor with the modulus.
class NonInvertibleDenominatorError : public Error {
public:
    using Error::Error;
};

/// A polynomial was evaluated without an assignment for one of its variables.
class MissingAssignmentError : public Error {
public:
    using Error::Error;
};

/// No stated congruence matches the requested (family, weight, range, r) combination.
class UnsupportedSpecError : public Error {
public:
    using Error::Error;
};

/// A domain type invariant was violated at construction or call time.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

} // namespace wzsum
