#pragma once

#include <stdexcept>
#include <string>

namespace cattaneo {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by numerical engines (series, contour quadrature, transform inversion)
/// when their own convergence diagnostics fail.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by a sampler that exhausted its retry budget.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw DomainError(message);
}

}  // namespace detail
}  // namespace cattaneo
