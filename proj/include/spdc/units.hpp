#pragma once

#include <cmath>
#include <numbers>

// Internal unit system: wavelengths in micrometers, times in femtoseconds,
// angles in radians, angular frequencies in rad/fs.  Reported time axes are
// dimensionless (omega0 * t), matching the figure conventions.

namespace spdc {

inline constexpr double kSpeedOfLight = 0.299792458;  // um / fs

// Gaussian model of sinc(x): exp(-alpha x^2) with equal FWHM.
inline constexpr double kSincFitAlpha = 0.19292;

inline constexpr double kPi = std::numbers::pi;

inline double omega_from_wavelength(double lambda_um) {
  return 2.0 * kPi * kSpeedOfLight / lambda_um;
}

inline double wavelength_from_omega(double omega_rad_fs) {
  return 2.0 * kPi * kSpeedOfLight / omega_rad_fs;
}

inline double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

}  // namespace spdc
