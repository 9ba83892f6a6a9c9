// Error taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace cwave {

// Input outside the mathematical domain of an operation (|beta| >= 1, point
// on the triangle boundary passed to penrose_inverse, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature or iteration did not reach the requested accuracy.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Picard iteration with growing updates (data outside the contraction regime).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A representation invariant was violated (e.g. non-swap-odd Goursat source).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration (grid too small, too few sweep points, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// NaN/Inf encountered in a numeric kernel.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cwave
