#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Error taxonomy for the library. Each condition the public operations can
// signal gets its own type so callers (and the CLI exit-code mapping) can
// catch precisely.

struct SpechtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact arithmetic
struct DivisionByZero : SpechtError {
    using SpechtError::SpechtError;
};
struct OrderMismatch : SpechtError {
    using SpechtError::SpechtError;
};

// polynomials
struct ArityMismatch : SpechtError {
    using SpechtError::SpechtError;
};
struct IndexOutOfRange : SpechtError {
    using SpechtError::SpechtError;
};

// group / group algebra
struct ParameterMismatch : SpechtError {
    using SpechtError::SpechtError;
};
struct CapExceeded : SpechtError {
    using SpechtError::SpechtError;
};

// tableaux
struct NotStandard : SpechtError {
    using SpechtError::SpechtError;
};
struct ShapeMismatch : SpechtError {
    using SpechtError::SpechtError;
};

// Specht modules
struct ZeroResult : SpechtError {
    using SpechtError::SpechtError;
};
struct SpanViolation : SpechtError {
    using SpechtError::SpechtError;
};
struct SingularBasis : SpechtError {
    using SpechtError::SpechtError;
};
struct ZeroDeterminant : SpechtError {
    using SpechtError::SpechtError;
};

// idempotents
struct NotIdempotent : SpechtError {
    using SpechtError::SpechtError;
};
struct NotEigen : SpechtError {
    using SpechtError::SpechtError;
};

// d-module checks
struct TheoremViolation : SpechtError {
    using SpechtError::SpechtError;
};

// CLI / JSON input
struct BadInput : SpechtError {
    using SpechtError::SpechtError;
};

}  // namespace specht
