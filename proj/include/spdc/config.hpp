#pragma once

#include <string>

#include "spdc/dispersion.hpp"
#include "spdc/units.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spdc {

enum class Scheme { two_slit, four_slit };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Experiment description.  JSON schema:
///   {crystal: "BBO" | {...inline...}, lambda_p_um, L_cm, phi0_rad, tau_ps,
///    waist_um, scheme: "two_slit"|"four_slit"}
/// plus optional slit_width_frac (slit width as a fraction of (dtheta)_L) and
/// detector_resolution (Gaussian counter resolution in 1/omega0 units, 0 = off).
struct SetupConfig {
  CrystalDispersion crystal = CrystalDispersion::bbo();
  double lambda_p_um = 0.4047;
  double L_cm = 0.5;
  double phi0_rad = 0.5007589;
  double tau_ps = 1.0;
  double waist_um = 100.0;
  Scheme scheme = Scheme::two_slit;
  double slit_width_frac = 0.5;
  double detector_resolution = 0.0;

  double L_um() const { return L_cm * 1e4; }
  double tau_fs() const { return tau_ps * 1e3; }
  double omega0() const { return omega_from_wavelength(lambda_p_um); }

  void validate() const;  // throws ConfigError

  static SetupConfig from_json(const nlohmann::json& j);
  static SetupConfig from_file(const std::string& path);
  void to_json(nlohmann::json& j) const;
};

}  // namespace spdc
