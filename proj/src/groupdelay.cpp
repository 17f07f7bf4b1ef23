#include "spdc/groupdelay.hpp"

#include <cmath>
#include <limits>

#include "spdc/numerics.hpp"
#include "spdc/phasematch.hpp"
#include "spdc/units.hpp"

namespace spdc {

GroupDelayCoefficients GroupDelayCoefficients::compute(
    const CrystalDispersion& crystal, double lambda_p_um, double phi0_rad,
    double xi) {
  auto p = NondegeneracyPoint::make(lambda_p_um, xi);
  GroupDelayCoefficients c;
  c.a_high = group_index_ordinary(crystal, p.omega_high);
  c.a_low = group_index_ordinary(crystal, p.omega_low);
  c.a_pump = group_index_extraordinary_at_angle(crystal, p.omega0, phi0_rad);
  c.a_plus = c.a_pump - 0.5 * (c.a_high + c.a_low);
  c.a_minus = 0.5 * (c.a_high - c.a_low);
  c.model_fragile = std::fabs(c.a_minus) < 1e-3;
  return c;
}

TimeScales timescales(const GroupDelayCoefficients& coeffs,
                      const SetupConfig& setup, double xi) {
  TimeScales t;
  double omega0 = setup.omega0();
  t.t_osc_fs = (xi > 0.0) ? 2.0 * kPi / (xi * omega0)
                          : std::numeric_limits<double>::infinity();
  t.t_decoh_fs = std::sqrt(2.0 * kSincFitAlpha) * setup.L_um() *
                 std::fabs(coeffs.a_minus) / kSpeedOfLight;
  t.tau_gr_fs = setup.L_um() * std::fabs(coeffs.a_plus) / (2.0 * kSpeedOfLight);
  t.osc_count = (xi > 0.0) ? t.t_decoh_fs / t.t_osc_fs : 0.0;
  return t;
}

PulseRegime pulse_regime(const SetupConfig& setup,
                         const GroupDelayCoefficients& coeffs) {
  double tau_gr = setup.L_um() * std::fabs(coeffs.a_plus) / (2.0 * kSpeedOfLight);
  return setup.tau_fs() >= 10.0 * tau_gr ? PulseRegime::long_pulse
                                         : PulseRegime::short_pulse;
}

double a_minus_zero(const CrystalDispersion& crystal, double lambda_p_um,
                    double phi0_rad, double lo, double hi) {
  auto f = [&](double xi) {
    return GroupDelayCoefficients::compute(crystal, lambda_p_um, phi0_rad, xi)
        .a_minus;
  };
  return num::brent_root(f, lo, hi, 1e-12);
}

}  // namespace spdc
