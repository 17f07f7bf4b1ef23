#include "spdc/hom.hpp"

#include <algorithm>
#include <cmath>

#include "spdc/errors.hpp"
#include "spdc/groupdelay.hpp"
#include "spdc/units.hpp"

namespace spdc {

BeamsplitterAmplitudes beamsplitter_amplitudes(Complex f12, Complex f21,
                                               double norm) {
  double k = norm / std::sqrt(2.0);
  return {k * (f12 + f21), k * (f12 - f21)};
}

HomParams HomParams::make(const SetupConfig& setup, double xi) {
  auto coeffs = GroupDelayCoefficients::compute(setup.crystal, setup.lambda_p_um,
                                                setup.phi0_rad, xi);
  HomParams p;
  p.xi = xi;
  p.omega0 = setup.omega0();
  p.s_fs = std::sqrt(kSincFitAlpha) * setup.L_um() * std::fabs(coeffs.a_minus) /
           kSpeedOfLight;
  double arg = xi * p.omega0 * p.s_fs;
  p.k_static = std::exp(-0.5 * arg * arg);
  p.t_osc_w0 = (xi > 0.0) ? 2.0 * kPi / xi : 0.0;
  p.t_decoh_w0 = std::sqrt(2.0) * p.s_fs * p.omega0;
  p.model_fragile = coeffs.model_fragile;
  return p;
}

double split_probability_two_slit(const HomParams& p, double dt_w0) {
  double dt = p.dt_fs(dt_w0);
  double g = std::exp(-dt * dt / (2.0 * p.s_fs * p.s_fs));
  return 0.5 * (1.0 - p.k_static * g);
}

double split_probability_four_slit(const HomParams& p, double dt_w0) {
  double dt = p.dt_fs(dt_w0);
  double g = std::exp(-dt * dt / (2.0 * p.s_fs * p.s_fs));
  return 0.5 * (1.0 - g * (std::cos(p.xi * dt_w0) + p.k_static) /
                          (1.0 + p.k_static));
}

double split_probability(const HomParams& p, Scheme scheme, double dt_w0) {
  return scheme == Scheme::two_slit ? split_probability_two_slit(p, dt_w0)
                                    : split_probability_four_slit(p, dt_w0);
}

double coincidence_density_two_slit(const HomParams& p, double dt_w0,
                                    double m_w0) {
  double s = p.s_fs * p.omega0;  // kernel width in omega0 units
  double a = (m_w0 - dt_w0) / s;
  double b = (m_w0 + dt_w0) / s;
  double a2 = a * a, b2 = b * b;
  // 2 e^{-(m^2+dt^2)/2s^2} cosh(m dt/s^2) regrouped into the two shifted
  // Gaussians; the cross term shares their exponents so the cosh-cos
  // cancellation at m = 0 is exact in floating point, and nothing overflows
  double d2 = std::exp(-0.5 * a2) + std::exp(-0.5 * b2) -
              2.0 * std::exp(-0.25 * (a2 + b2)) * std::cos(p.xi * m_w0);
  return d2 / (4.0 * std::sqrt(2.0 * kPi) * s);
}

double coincidence_density_four_slit(const HomParams& p, double dt_w0,
                                     double m_w0) {
  double s = p.s_fs * p.omega0;
  double vp = m_w0 + dt_w0;
  double vm = m_w0 - dt_w0;
  double t1 = std::cos(0.5 * p.xi * vp) * std::exp(-vp * vp / (4.0 * s * s));
  double t2 = std::cos(0.5 * p.xi * vm) * std::exp(-vm * vm / (4.0 * s * s));
  double d4 = (t1 - t2) * (t1 - t2);
  return d4 / (2.0 * std::sqrt(2.0 * kPi) * s * (1.0 + p.k_static));
}

double coincidence_density(const HomParams& p, Scheme scheme, double dt_w0,
                           double m_w0) {
  return scheme == Scheme::two_slit
             ? coincidence_density_two_slit(p, dt_w0, m_w0)
             : coincidence_density_four_slit(p, dt_w0, m_w0);
}

namespace {

std::vector<double> symmetric_grid(const HomParams& p, const CurveOptions& opt,
                                   double extra_w0) {
  double span = opt.span_override_w0 > 0.0
                    ? opt.span_override_w0
                    : std::max(opt.span_decoh * p.t_decoh_w0,
                               opt.span_osc * p.t_osc_w0) +
                          extra_w0;
  double step = p.t_osc_w0 > 0.0 ? p.t_osc_w0 / opt.points_per_osc
                                 : span / 512.0;
  int n = std::max(8, static_cast<int>(std::ceil(span / step)));
  std::vector<double> x(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) x[i] = (i - n) * step;
  return x;
}

}  // namespace

HomCurve split_probability_curve(const SetupConfig& setup, double xi,
                                 Scheme scheme, const CurveOptions& opt) {
  auto p = HomParams::make(setup, xi);
  HomCurve c;
  c.scheme = scheme;
  c.xi = xi;
  c.x_label = "omega0*dt";
  c.y_label = "w_split";
  c.t_osc_w0 = p.t_osc_w0;
  c.t_decoh_w0 = p.t_decoh_w0;
  c.model_fragile = p.model_fragile;
  c.x = symmetric_grid(p, opt, 0.0);
  c.y.reserve(c.x.size());
  for (double dt : c.x) c.y.push_back(split_probability(p, scheme, dt));
  return c;
}

HomCurve coincidence_density_curve(const SetupConfig& setup, double xi,
                                   Scheme scheme, double dt_w0,
                                   DensityNorm norm, const CurveOptions& opt) {
  auto p = HomParams::make(setup, xi);
  HomCurve c;
  c.scheme = scheme;
  c.xi = xi;
  c.x_label = "omega0*(t1-t2)";
  c.y_label = norm == DensityNorm::unit ? "density_unit" : "density_prob";
  c.t_osc_w0 = p.t_osc_w0;
  c.t_decoh_w0 = p.t_decoh_w0;
  c.model_fragile = p.model_fragile;
  c.x = symmetric_grid(p, opt, std::fabs(dt_w0));
  c.y.reserve(c.x.size());
  for (double m : c.x) c.y.push_back(coincidence_density(p, scheme, dt_w0, m));
  if (norm == DensityNorm::unit) {
    // trapezoid integral over the emitted grid
    double integral = 0.0;
    for (std::size_t i = 1; i < c.x.size(); ++i)
      integral += 0.5 * (c.y[i] + c.y[i - 1]) * (c.x[i] - c.x[i - 1]);
    if (integral > 1e-300)
      for (double& v : c.y) v /= integral;
  }
  return c;
}

void apply_detector_resolution(HomCurve& curve, double sigma_w0) {
  if (sigma_w0 <= 0.0 || curve.x.size() < 2) return;
  double dx = curve.x[1] - curve.x[0];
  int halfw = static_cast<int>(std::ceil(4.0 * sigma_w0 / dx));
  std::vector<double> kernel(2 * halfw + 1);
  double sum = 0.0;
  for (int i = -halfw; i <= halfw; ++i) {
    double t = i * dx / sigma_w0;
    kernel[i + halfw] = std::exp(-0.5 * t * t);
    sum += kernel[i + halfw];
  }
  for (double& k : kernel) k /= sum;
  int n = static_cast<int>(curve.y.size());
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = -halfw; j <= halfw; ++j) {
      int k = std::clamp(i + j, 0, n - 1);
      acc += kernel[j + halfw] * curve.y[k];
    }
    out[i] = acc;
  }
  curve.y = std::move(out);
}

CombReport analyze_comb(const HomCurve& curve) {
  const auto& x = curve.x;
  const auto& y = curve.y;
  const int n = static_cast<int>(y.size());
  if (n < 8) throw ResolutionError("analyze_comb: curve too short");
  const double dx = x[1] - x[0];
  if (curve.t_osc_w0 > 0.0 && dx > curve.t_osc_w0 / 8.0)
    throw ResolutionError(
        "analyze_comb: need at least 8 samples per expected T_osc");

  // baseline from the outer 5% of samples on each side
  int edge = std::max(1, n / 20);
  std::vector<double> edges;
  edges.reserve(2 * edge);
  for (int i = 0; i < edge; ++i) {
    edges.push_back(y[i]);
    edges.push_back(y[n - 1 - i]);
  }
  std::nth_element(edges.begin(), edges.begin() + edges.size() / 2,
                   edges.end());
  const double base = edges[edges.size() / 2];
  const double ymax = *std::max_element(y.begin(), y.end());

  // strict local maxima above 1e-3 of the dynamic range, parabolic refinement
  CombReport rep;
  std::vector<double> ph;
  for (int i = 1; i + 1 < n; ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1] &&
        (y[i] - base) > 1e-3 * (ymax - base)) {
      double d1 = y[i] - y[i - 1], d2 = y[i] - y[i + 1];
      double off = (d1 + d2) > 0.0 ? 0.5 * (d1 - d2) / (d1 + d2) : 0.0;
      rep.peak_positions.push_back(x[i] + off * dx);
      ph.push_back(y[i] + 0.25 * (y[i + 1] - y[i - 1]) * off - base);
    }
  }
  const auto& px = rep.peak_positions;
  if (px.empty()) return rep;
  if (px.size() == 1) {
    rep.comb_count = 1;
    rep.comb_centers = {px[0]};
    return rep;
  }

  std::vector<double> gaps(px.size() - 1);
  for (std::size_t i = 0; i + 1 < px.size(); ++i) gaps[i] = px[i + 1] - px[i];
  std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
  rep.period = gaps[gaps.size() / 2];
  if (rep.period < 4.0 * dx)
    throw ResolutionError("analyze_comb: peaks closer than 4 samples apart");

  // envelope FWHM: outermost half-max crossings of the peak-height polyline
  double hmax = *std::max_element(ph.begin(), ph.end());
  double half = 0.5 * hmax;
  double lo = std::nan(""), hi = std::nan("");
  if (ph.front() >= half) lo = px.front();
  for (std::size_t i = 0; i + 1 < ph.size(); ++i) {
    if ((ph[i] < half) != (ph[i + 1] < half)) {
      double xc = px[i] + (half - ph[i]) / (ph[i + 1] - ph[i]) *
                              (px[i + 1] - px[i]);
      if (std::isnan(lo)) lo = xc;
      hi = xc;
    }
  }
  if (ph.back() >= half) hi = px.back();
  if (!std::isnan(lo) && !std::isnan(hi) && hi > lo)
    rep.envelope_fwhm = hi - lo;

  // comb lobes on a max-filtered envelope (radius ~ 3/4 of a period)
  const int r = std::max(1, static_cast<int>(std::lround(0.75 * rep.period / dx)));
  std::vector<double> env(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double m = 0.0;
    for (int j = std::max(0, i - r); j <= std::min(n - 1, i + r); ++j)
      m = std::max(m, y[j] - base);
    env[i] = m;
  }
  auto plateau_mid = [&](int idx) {
    double h = env[idx] * (1.0 - 1e-12);
    int a = idx, b = idx;
    while (a > 0 && env[a - 1] >= h) --a;
    while (b + 1 < n && env[b + 1] >= h) ++b;
    return (a + b) / 2;
  };
  int im = plateau_mid(static_cast<int>(
      std::max_element(env.begin(), env.end()) - env.begin()));
  double h1 = env[im];

  // refine a lobe position to its tallest raw peak within the filter radius
  auto refine = [&](int idx) {
    double xl = x[idx] - r * dx, xr = x[idx] + r * dx;
    double best_h = -1.0, best_x = x[idx];
    for (std::size_t i = 0; i < px.size(); ++i) {
      if (px[i] >= xl && px[i] <= xr && ph[i] > best_h) {
        best_h = ph[i];
        best_x = px[i];
      }
    }
    return best_x;
  };

  int second = -1;
  for (int j = 0; j < n; ++j) {
    if (env[j] < 0.25 * h1) continue;
    int a = std::min(im, j), b = std::max(im, j);
    if (b - a <= 2 * r) continue;
    double valley = env[a];
    for (int k = a; k <= b; ++k) valley = std::min(valley, env[k]);
    if (valley < 0.7 * std::min(h1, env[j]) &&
        (second < 0 || env[j] > env[second]))
      second = j;
  }
  if (second < 0) {
    rep.comb_count = 1;
    rep.comb_centers = {refine(im)};
  } else {
    rep.comb_count = 2;
    double c1 = refine(im), c2 = refine(plateau_mid(second));
    if (c1 > c2) std::swap(c1, c2);
    rep.comb_centers = {c1, c2};
    rep.comb_separation = c2 - c1;
  }
  return rep;
}

}  // namespace spdc
