#pragma once

#include "spdc/config.hpp"
#include "spdc/dispersion.hpp"

namespace spdc {

/// Central frequencies/wavelengths of a pair at nondegeneracy xi:
/// omega_{h,l} = omega0 (1 +- xi)/2, lambda_+- = 2 lambda_p / (1 +- xi).
struct NondegeneracyPoint {
  double xi = 0.0;
  double omega0 = 0.0;       // rad/fs
  double omega_high = 0.0;
  double omega_low = 0.0;
  double lambda_plus_um = 0.0;   // higher-frequency (inner cone) photon
  double lambda_minus_um = 0.0;  // lower-frequency (outer cone) photon

  static NondegeneracyPoint make(double lambda_p_um, double xi);
};

/// n_eff(xi) = (1+xi)/2 n_o(2 lam_p/(1+xi)) + (1-xi)/2 n_o(2 lam_p/(1-xi)).
/// Throws TransparencyError when either sideband leaves the window.
double effective_index(const CrystalDispersion& crystal, double lambda_p_um,
                       double xi);

/// N_eff(xi) = (1-xi^2) n_o(lam_+) n_o(lam_-) / n_eff(xi).
double effective_index_N(const CrystalDispersion& crystal, double lambda_p_um,
                         double xi);

enum class Regime { collinear, noncollinear, forbidden };

std::string to_string(Regime r);

/// Noncollinearity parameter from theta0^2 = 2 N_eff (n_eff - n_p(phi0)).
/// Radicand within +-1e-10 of zero classifies collinear; negative, forbidden.
struct Theta0Result {
  Regime regime = Regime::forbidden;
  double theta0 = 0.0;   // rad; 0 unless noncollinear
  double radicand = 0.0; // 2 N_eff (n_eff - n_p), sign decides the regime
};

Theta0Result theta0(const CrystalDispersion& crystal, double lambda_p_um,
                    double phi0_rad, double xi);

/// Cone opening angles and the two-sinc geometry scales.
struct ConeGeometry {
  Regime regime = Regime::forbidden;
  double theta0 = 0.0;
  double theta_inner = 0.0;     // theta0/(1+xi), higher-frequency photon
  double theta_outer = 0.0;     // theta0/(1-xi), lower-frequency photon
  double delta_theta_L = 0.0;   // (lambda_p / pi L) N_eff / theta0
  double two_sinc_ratio = 0.0;  // theta0 / delta_theta_L (>> 1 required)
  double mismatch_margin = 0.0; // (n_eff - n_p) / (lambda_p / 2 pi L)
};

/// Throws UnsupportedRegimeError in the forbidden regime; in the collinear
/// regime delta_theta_L and the ratios are left at 0 (flagged by regime).
ConeGeometry cone_geometry(const CrystalDispersion& crystal,
                           const SetupConfig& setup, double xi);

/// Root of n_p(phi0) = n_eff(xi) on (0, pi/2), absolute tolerance 1e-9 rad.
/// Bracket [0.05, 1.5] with an automatic sign-change scan.
double collinear_angle(const CrystalDispersion& crystal, double lambda_p_um,
                       double xi);

/// Largest xi keeping the lower-frequency photon inside the window:
/// xi_max = 1 - 2 lambda_p / window_hi (clamped to [0, 1)).
double xi_max(const CrystalDispersion& crystal, double lambda_p_um);

/// Scan results over xi in [0, xi_max]: extremum of n_eff and the range of the
/// collinear locus phi0^Coll(xi).  2001-point grid + golden-section refinement.
struct CollinearLocusScan {
  double xi_at_neff_max = 0.0;
  double neff_max = 0.0;
  double phi_min = 0.0;   // = phi0^Coll at the n_eff maximum
  double xi_at_phi_min = 0.0;
  double phi_max = 0.0;   // attained at the xi_max endpoint
};

CollinearLocusScan scan_collinear_locus(const CrystalDispersion& crystal,
                                        double lambda_p_um);

}  // namespace spdc
