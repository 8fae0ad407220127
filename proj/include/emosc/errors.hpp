#pragma once

#include <stdexcept>
#include <string>

namespace emosc {

/// Parameter or time outside the range where the closed forms are defined.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Normalization condition cannot be met (degenerate basis).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spatial grid too small or malformed for stencil work.
struct GridError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Hermite/quantum-number combination would overflow doubles.
struct OverflowGuard : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// No operator convention reproduces the required residuals.
struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Wavefunction has not decayed at the quadrature window edge.
struct TailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested generator case is neither printed nor derivable.
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace emosc
