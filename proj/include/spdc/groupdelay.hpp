#pragma once

#include "spdc/config.hpp"
#include "spdc/dispersion.hpp"

namespace spdc {

/// First-order frequency-expansion coefficients of the mismatch:
/// A_plus = A_p - (A_h + A_l)/2,  A_minus = (A_h - A_l)/2.
/// A_minus equals d n_eff / d xi, so its zero coincides with the n_eff maximum.
struct GroupDelayCoefficients {
  double a_pump = 0.0;   // extraordinary group index at omega0, angle phi0
  double a_high = 0.0;   // ordinary group index at omega_h
  double a_low = 0.0;    // ordinary group index at omega_l
  double a_plus = 0.0;
  double a_minus = 0.0;
  // |a_minus| < 1e-3: the first-order temporal widths are collapsing and the
  // model is fragile near the A_minus zero.
  bool model_fragile = false;

  static GroupDelayCoefficients compute(const CrystalDispersion& crystal,
                                        double lambda_p_um, double phi0_rad,
                                        double xi);
};

/// Characteristic times, in fs (report omega0 * t for figure axes).
struct TimeScales {
  double t_osc_fs = 0.0;    // 2 pi / (xi omega0); +inf at xi = 0
  double t_decoh_fs = 0.0;  // sqrt(2 alpha) L |A_minus| / c
  double tau_gr_fs = 0.0;   // L |A_plus| / (2 c)
  double osc_count = 0.0;   // t_decoh / t_osc
};

TimeScales timescales(const GroupDelayCoefficients& coeffs,
                      const SetupConfig& setup, double xi);

enum class PulseRegime { long_pulse, short_pulse };

/// long_pulse iff tau >= 10 tau_gr (inclusive); the reduced wavefunctions of
/// the biphoton module require long_pulse.
PulseRegime pulse_regime(const SetupConfig& setup,
                         const GroupDelayCoefficients& coeffs);

/// Zero of A_minus(xi) on (lo, hi), bisection to 1e-12.
double a_minus_zero(const CrystalDispersion& crystal, double lambda_p_um,
                    double phi0_rad, double lo, double hi);

}  // namespace spdc
