#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

// Wavelength outside the crystal transparency window (photon absorbed /
// dispersion model invalid there).
struct TransparencyError : std::domain_error {
  using std::domain_error::domain_error;
};

// Wavelength too close to a window edge for a derivative neighborhood.
struct DerivativeDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// No root of n_p(phi0) = n_eff(xi) in the search bracket.
struct NoCollinearSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires the long-pulse reduction (tau >> tau_gr).
struct UnsupportedRegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A_minus = 0: temporal width of the first-order model collapses.
struct DegenerateWidthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid too coarse for the requested analysis or transform.
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed configuration (bad JSON, invalid field values).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace spdc
