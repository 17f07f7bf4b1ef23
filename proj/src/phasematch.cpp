#include "spdc/phasematch.hpp"

#include <algorithm>
#include <cmath>

#include "spdc/errors.hpp"
#include "spdc/numerics.hpp"
#include "spdc/units.hpp"

namespace spdc {

namespace {
// |n_eff - n_p| below this counts as collinear: separates a numerically
// vanishing radicand from small negative noise.
constexpr double kCollinearTol = 1e-10;
}  // namespace

NondegeneracyPoint NondegeneracyPoint::make(double lambda_p_um, double xi) {
  if (xi < 0.0 || xi >= 1.0)
    throw std::invalid_argument("nondegeneracy parameter must lie in [0, 1)");
  NondegeneracyPoint p;
  p.xi = xi;
  p.omega0 = omega_from_wavelength(lambda_p_um);
  p.omega_high = p.omega0 * (1.0 + xi) / 2.0;
  p.omega_low = p.omega0 * (1.0 - xi) / 2.0;
  p.lambda_plus_um = 2.0 * lambda_p_um / (1.0 + xi);
  p.lambda_minus_um = 2.0 * lambda_p_um / (1.0 - xi);
  return p;
}

double effective_index(const CrystalDispersion& crystal, double lambda_p_um,
                       double xi) {
  auto p = NondegeneracyPoint::make(lambda_p_um, xi);
  return 0.5 * (1.0 + xi) * index_ordinary(crystal, p.lambda_plus_um) +
         0.5 * (1.0 - xi) * index_ordinary(crystal, p.lambda_minus_um);
}

double effective_index_N(const CrystalDispersion& crystal, double lambda_p_um,
                         double xi) {
  auto p = NondegeneracyPoint::make(lambda_p_um, xi);
  double no_p = index_ordinary(crystal, p.lambda_plus_um);
  double no_m = index_ordinary(crystal, p.lambda_minus_um);
  double neff = 0.5 * (1.0 + xi) * no_p + 0.5 * (1.0 - xi) * no_m;
  return (1.0 - xi * xi) * no_p * no_m / neff;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::collinear: return "collinear";
    case Regime::noncollinear: return "noncollinear";
    default: return "forbidden";
  }
}

Theta0Result theta0(const CrystalDispersion& crystal, double lambda_p_um,
                    double phi0_rad, double xi) {
  double neff = effective_index(crystal, lambda_p_um, xi);
  double np = index_extraordinary_at_angle(crystal, lambda_p_um, phi0_rad);
  double neffN = effective_index_N(crystal, lambda_p_um, xi);
  Theta0Result r;
  r.radicand = 2.0 * neffN * (neff - np);
  if (std::fabs(neff - np) < kCollinearTol) {
    r.regime = Regime::collinear;
  } else if (r.radicand < 0.0) {
    r.regime = Regime::forbidden;
  } else {
    r.regime = Regime::noncollinear;
    r.theta0 = std::sqrt(r.radicand);
  }
  return r;
}

ConeGeometry cone_geometry(const CrystalDispersion& crystal,
                           const SetupConfig& setup, double xi) {
  auto t = theta0(crystal, setup.lambda_p_um, setup.phi0_rad, xi);
  if (t.regime == Regime::forbidden)
    throw UnsupportedRegimeError(
        "cone_geometry: forbidden regime (n_p > n_eff); no SPDC emission");
  ConeGeometry g;
  g.regime = t.regime;
  g.theta0 = t.theta0;
  if (t.regime == Regime::collinear) return g;  // (dtheta)_L undefined

  g.theta_inner = t.theta0 / (1.0 + xi);
  g.theta_outer = t.theta0 / (1.0 - xi);
  double neffN = effective_index_N(crystal, setup.lambda_p_um, xi);
  g.delta_theta_L = setup.lambda_p_um / (kPi * setup.L_um()) * neffN / t.theta0;
  g.two_sinc_ratio = t.theta0 / g.delta_theta_L;
  double neff = effective_index(crystal, setup.lambda_p_um, xi);
  double np = index_extraordinary_at_angle(crystal, setup.lambda_p_um,
                                           setup.phi0_rad);
  g.mismatch_margin =
      (neff - np) / (setup.lambda_p_um / (2.0 * kPi * setup.L_um()));
  return g;
}

double collinear_angle(const CrystalDispersion& crystal, double lambda_p_um,
                       double xi) {
  double neff = effective_index(crystal, lambda_p_um, xi);
  auto f = [&](double phi) {
    return index_extraordinary_at_angle(crystal, lambda_p_um, phi) - neff;
  };
  double hi = std::min(1.5, kPi / 2.0);
  double root = num::scan_and_bisect(f, 0.05, hi, 64, 1e-9);
  if (std::isnan(root))
    throw NoCollinearSolutionError(
        "collinear_angle: no sign change of n_p(phi) - n_eff in [0.05, 1.5]");
  return root;
}

double xi_max(const CrystalDispersion& crystal, double lambda_p_um) {
  double v = 1.0 - 2.0 * lambda_p_um / crystal.window_hi_um;
  return std::clamp(v, 0.0, 1.0 - 1e-15);
}

CollinearLocusScan scan_collinear_locus(const CrystalDispersion& crystal,
                                        double lambda_p_um) {
  const double xmax = xi_max(crystal, lambda_p_um);
  const int n = 2001;
  CollinearLocusScan out;

  // coarse grid for the n_eff maximum
  double best = -1.0;
  int ibest = 0;
  for (int i = 0; i < n; ++i) {
    double xi = xmax * i / (n - 1);
    double v = effective_index(crystal, lambda_p_um, xi);
    if (v > best) {
      best = v;
      ibest = i;
    }
  }
  double lo = xmax * std::max(0, ibest - 1) / (n - 1);
  double hi = xmax * std::min(n - 1, ibest + 1) / (n - 1);
  auto neg = [&](double xi) { return -effective_index(crystal, lambda_p_um, xi); };
  out.xi_at_neff_max = num::golden_min(neg, lo, hi, 1e-10);
  out.neff_max = effective_index(crystal, lambda_p_um, out.xi_at_neff_max);

  // phi0^Coll is a monotone map of n_eff, so its minimum sits at the n_eff
  // maximum and its maximum at one of the xi endpoints.
  out.xi_at_phi_min = out.xi_at_neff_max;
  out.phi_min = collinear_angle(crystal, lambda_p_um, out.xi_at_phi_min);
  out.phi_max = std::max(collinear_angle(crystal, lambda_p_um, 0.0),
                         collinear_angle(crystal, lambda_p_um, xmax));
  return out;
}

}  // namespace spdc
