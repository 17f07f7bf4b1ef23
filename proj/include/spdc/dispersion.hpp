#pragma once

#include <string>

#include "spdc/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spdc {

// Single-pole Sellmeier form n^2 = A + B / (lambda^2 - C) - D lambda^2,
// lambda in micrometers.
struct SellmeierSet {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double n2(double lambda_um) const {
    double l2 = lambda_um * lambda_um;
    return a + b / (l2 - c) - d * l2;
  }
  double dn2_dlambda(double lambda_um) const {
    double l2 = lambda_um * lambda_um;
    double denom = l2 - c;
    return -2.0 * lambda_um * b / (denom * denom) - 2.0 * d * lambda_um;
  }
};

/// Uniaxial crystal dispersion: ordinary and extraordinary Sellmeier sets plus
/// the transparency window (closed interval, um) inside which the model is
/// considered valid.
struct CrystalDispersion {
  std::string name;
  SellmeierSet ordinary;
  SellmeierSet extraordinary;
  double window_lo_um = 0.0;
  double window_hi_um = 0.0;

  bool in_window(double lambda_um) const {
    return lambda_um >= window_lo_um && lambda_um <= window_hi_um;
  }

  /// Built-in beta barium borate preset (Kato-form coefficients).  The window
  /// upper edge 13.29 um sits just inside the ordinary-wave n^2 > 0 domain.
  static const CrystalDispersion& bbo();

  /// Dispersionless crystal with constant indices; test/diagnostic helper.
  static CrystalDispersion constant_index(const std::string& name, double n_o,
                                          double n_e);

  /// {name, sellmeier_o: [A,B,C,D], sellmeier_e: [A,B,C,D], window_um: [lo, hi]}
  static CrystalDispersion from_json(const nlohmann::json& j);
  void to_json(nlohmann::json& j) const;

  /// Preset lookup by name ("BBO"); throws ConfigError for unknown names.
  static CrystalDispersion named(const std::string& name);
};

/// Ordinary-wave refractive index n_o(lambda).
/// Throws TransparencyError outside the window (or where n^2 <= 0).
double index_ordinary(const CrystalDispersion& crystal, double lambda_um);

/// Principal extraordinary index n_e(lambda).
double index_extraordinary(const CrystalDispersion& crystal, double lambda_um);

/// Extraordinary wave at angle phi between wave vector and optic axis:
/// n(phi)^-2 = cos^2(phi)/n_o^2 + sin^2(phi)/n_e^2.  phi in [0, pi/2].
double index_extraordinary_at_angle(const CrystalDispersion& crystal,
                                    double lambda_um, double phi_rad);

/// Dimensionless group index c dk/domega = n + omega dn/domega for the
/// ordinary wave, from the analytic Sellmeier derivative.  Requires a small
/// relative neighborhood (2e-4) of lambda inside the window so that the
/// finite-difference validation stencil is evaluable too.
double group_index_ordinary(const CrystalDispersion& crystal,
                            double omega_rad_fs);

/// Group index of the extraordinary wave at angle phi.
double group_index_extraordinary_at_angle(const CrystalDispersion& crystal,
                                          double omega_rad_fs, double phi_rad);

}  // namespace spdc
