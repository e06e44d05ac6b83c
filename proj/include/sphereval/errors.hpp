#pragma once

#include <stdexcept>
#include <string>

namespace sphereval {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (dimension, degree, range).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested (body, order) or (operator, representation) pair is not implemented.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// An inverse transform hit a zero multiplier or exceeded the conditioning cap.
class SingularOperatorError : public Error {
public:
    using Error::Error;
};

/// Successive quadrature refinements disagree.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// A series truncation estimate exceeded its tolerance.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Degree bookkeeping of an operator failed (i out of range for Λ, 𝔏, 𝔽).
class DegreeError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace sphereval
