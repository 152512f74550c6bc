#pragma once

#include <stdexcept>
#include <string>

namespace svmaj {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation (e.g. x < 0 for x^p).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Zero raised to a negative power, or a singular matrix where an inverse was needed.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// An iterative routine failed to converge at the working precision.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy a certified property (hermitian, psd, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Matrix whose condition estimate exceeds what the working precision can resolve.
class IllConditioned : public Error {
public:
    using Error::Error;
};

/// Malformed serialised input (JSON, decimal strings, exponents).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace svmaj
