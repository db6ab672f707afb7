#pragma once

#include <stdexcept>
#include <string>

namespace monolab {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix / tensor-index dimension mismatch.
class shape_error : public error {
public:
    using error::error;
};

/// Input violates a documented precondition or invariant.
class validation_error : public error {
public:
    using error::error;
};

/// Requested object exceeds the configured element cap.
class capacity_error : public error {
public:
    using error::error;
};

/// Numerical failure (non-convergence, inconsistent eigensystem).
class numeric_error : public error {
public:
    using error::error;
};

} // namespace monolab
