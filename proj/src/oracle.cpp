#include "spdc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include <fftw3.h>
#include <nlohmann/json.hpp>

#include "spdc/errors.hpp"
#include "spdc/groupdelay.hpp"
#include "spdc/numerics.hpp"
#include "spdc/parallel.hpp"
#include "spdc/phasematch.hpp"
#include "spdc/rng.hpp"
#include "spdc/units.hpp"

namespace spdc::oracle {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex g_fftw_mutex;

struct RotatedDomain {
  double u_center, u_half;  // t1+t2 range
  double v_half;            // t1-t2 range is +-v_half around 0
  double seed_width_v;      // panel seeding for the oscillatory axis
};

RotatedDomain domain_for(const TemporalWF& wf, double widths) {
  RotatedDomain d;
  // |F|^2 u-part: exp(-u^2 / 4 tau^2), u centered at -dt
  d.u_center = -wf.dt_fs();
  d.u_half = widths * std::sqrt(2.0) * wf.tau_fs();
  // v0 = t1 - t2: amplitude humps at +-dt with width ~ s
  d.v_half = std::fabs(wf.dt_fs()) + widths * wf.kernel_width_fs();
  double t_osc = (wf.xi() > 0.0)
                     ? 2.0 * kPi / (wf.xi() * wf.omega0())
                     : wf.kernel_width_fs();
  d.seed_width_v = std::min(0.5 * t_osc, wf.kernel_width_fs());
  return d;
}

// Iterated 2-D quadrature of fn(t1, t2) in rotated coordinates
// u = t1+t2, v = t1-t2 (Jacobian 1/2): inner smooth Gaussian axis u,
// outer oscillatory axis v with seeded panels.
double integrate_rotated(const TemporalWF& wf,
                         const std::function<double(double, double)>& fn,
                         double widths, double abs_tol) {
  RotatedDomain d = domain_for(wf, widths);
  auto outer = [&](double v) {
    auto inner = [&](double u) {
      double t1 = 0.5 * (u + v);
      double t2 = 0.5 * (u - v);
      return fn(t1, t2);
    };
    return num::integrate(inner, d.u_center - d.u_half, d.u_center + d.u_half,
                          abs_tol * 1e-3, 1e-10)
        .value;
  };
  auto res = num::integrate_seeded(outer, -d.v_half, d.v_half, d.seed_width_v,
                                   abs_tol, 1e-8);
  return 0.5 * res.value;
}

}  // namespace

double normalization_by_quadrature(const SetupConfig& setup, double xi,
                                   double dt_w0, Scheme scheme) {
  double dt_fs = dt_w0 / setup.omega0();
  TemporalWF wf = TemporalWF::make(setup, xi, dt_fs, scheme);
  double n = wf.norm();
  auto fn = [&](double t1, double t2) {
    double a = std::abs(wf.value(t1, t2));
    return n * n * a * a;
  };
  return 2.0 * integrate_rotated(wf, fn, 10.0, 1e-12);
}

double density_integral_by_quadrature(const SetupConfig& setup, double xi,
                                      double dt_w0, Scheme scheme) {
  auto p = HomParams::make(setup, xi);
  double span = std::fabs(dt_w0) + 10.0 * p.t_decoh_w0;
  double t_osc = p.t_osc_w0 > 0.0 ? p.t_osc_w0 : span;
  auto f = [&](double m) { return coincidence_density(p, scheme, dt_w0, m); };
  auto res = num::integrate_seeded(
      f, -span, span, std::min(0.5 * t_osc, p.t_decoh_w0 / std::sqrt(2.0)),
      1e-10, 1e-9);
  return res.value;
}

// ---------------------------------------------------------------------------
// FFT oracle

namespace {

struct Axis {
  int n = 0;
  double dnu = 0.0;   // frequency step
  double dt = 0.0;    // conjugate time step: dt = 4 pi / (n dnu)
  double nu(int j) const { return (j - n / 2) * dnu; }
  double t(int m) const { return (m - n / 2) * dt; }
};

int next_pow2(double x) {
  int n = 8;
  while (n < x && n < (1 << 22)) n <<= 1;
  return n;
}

Axis make_axis(double half_width_nu, double needed_time_halfspan) {
  Axis a;
  a.n = next_pow2(needed_time_halfspan * 2.0 * half_width_nu / (2.0 * kPi));
  if (a.n > (1 << 16))
    throw ResolutionError("fft grid would exceed 65536 points per axis");
  a.dnu = 2.0 * half_width_nu / a.n;
  a.dt = 4.0 * kPi / (a.n * a.dnu);
  return a;
}

// Centered transform F[m] = sum_j g[j] e^{+i nu_j t_m / 2} dnu via FFTW,
// with t_m = (m - n/2) dt and the dt above (the 1/2 in the exponent is the
// rotated-coordinate convention).
void centered_fft_2d(std::vector<std::complex<double>>& grid, const Axis& ap,
                     const Axis& av) {
  for (int j = 0; j < ap.n; ++j)
    for (int k = 0; k < av.n; ++k)
      if ((j + k) & 1) grid[j * av.n + k] = -grid[j * av.n + k];
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_plan plan = fftw_plan_dft_2d(
        ap.n, av.n, reinterpret_cast<fftw_complex*>(grid.data()),
        reinterpret_cast<fftw_complex*>(grid.data()), FFTW_BACKWARD,
        FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  double weight = ap.dnu * av.dnu;
  for (int m = 0; m < ap.n; ++m)
    for (int l = 0; l < av.n; ++l) {
      double sgn = ((m + l) & 1) ? -weight : weight;
      grid[m * av.n + l] *= sgn;
    }
}

struct FftSetup {
  TwoFrequencyWF wf2;
  TemporalWF wft;  // for widths and comparison
  double xi, omega0, dt_fs;
  Scheme scheme;
  SincKernel kernel;
};

FftTemporalField run_fft(const FftSetup& fs, int refine) {
  const double tau = fs.wft.tau_fs();
  const double s = fs.wft.kernel_width_fs();
  const double a = std::fabs(fs.wf2.sinc_half_scale());  // L|A-|/2c

  // frequency half-widths
  double w_plus = 10.0 / tau;
  double w_minus;
  if (fs.kernel == SincKernel::gaussian_model)
    w_minus = 12.0 / s;
  else
    w_minus = 400.0 / a;  // sinc tails ~ 1/x; truncation ~ 1e-3 relative
  if (fs.scheme == Scheme::four_slit) w_minus += fs.xi * fs.omega0;

  // time spans we must cover without wraparound
  double u_span = 14.0 * tau + std::fabs(fs.dt_fs);
  double v_span = std::fabs(fs.dt_fs) + std::max(10.0 * s, 4.0 * a);

  Axis ap = make_axis(w_plus, u_span);
  Axis av = make_axis(w_minus, v_span);
  ap.n *= refine;
  av.n *= refine;
  ap.dnu = 2.0 * w_plus / ap.n;
  ap.dt = 4.0 * kPi / (ap.n * ap.dnu);
  av.dnu = 2.0 * w_minus / av.n;
  av.dt = 4.0 * kPi / (av.n * av.dnu);

  // sample the two-frequency wavefunction; detuned coordinates, co-rotating
  // delay phase (the constant carrier is restored afterwards)
  std::vector<std::complex<double>> grid(
      static_cast<std::size_t>(ap.n) * av.n);
  for (int j = 0; j < ap.n; ++j) {
    double nup = ap.nu(j);
    for (int k = 0; k < av.n; ++k) {
      double num = av.nu(k);
      // four-slit grids are centered on omega0/2 (mu coordinates); the
      // two-frequency evaluator expects nu- relative to xi*omega0
      double nu_minus = (fs.scheme == Scheme::four_slit)
                            ? num - fs.xi * fs.omega0
                            : num;
      grid[static_cast<std::size_t>(j) * av.n + k] =
          fs.wf2.value_detuned(nup, nu_minus, fs.kernel);
    }
  }
  centered_fft_2d(grid, ap, av);

  FftTemporalField out;
  out.du = ap.dt;
  out.dv = av.dt;
  out.u0.resize(ap.n);
  out.v0.resize(av.n);
  for (int m = 0; m < ap.n; ++m) out.u0[m] = ap.t(m);
  for (int l = 0; l < av.n; ++l) out.v0[l] = av.t(l);

  // restore the carrier for the two-slit scheme: e^{i xi w0 (v0 + dt)/2}
  // (four-slit comes out real with the cosine envelope built in)
  if (fs.scheme == Scheme::two_slit) {
    for (int m = 0; m < ap.n; ++m)
      for (int l = 0; l < av.n; ++l) {
        double ph = 0.5 * fs.xi * fs.omega0 * (out.v0[l] + fs.dt_fs);
        grid[static_cast<std::size_t>(m) * av.n + l] *=
            std::complex<double>{std::cos(ph), std::sin(ph)};
      }
  }

  // discrete normalization: 2 int |F|^2 dt1 dt2 = sum |F|^2 du dv
  double nrm2 = 0.0;
  for (const auto& z : grid) nrm2 += std::norm(z);
  nrm2 *= out.du * out.dv;
  double nfft = 1.0 / std::sqrt(nrm2);
  for (auto& z : grid) z *= nfft;
  out.f = std::move(grid);
  return out;
}

FftSetup make_fft_setup(const SetupConfig& setup, double xi, double dt_w0,
                        Scheme scheme, SincKernel kernel) {
  double dt_fs = dt_w0 / setup.omega0();
  return FftSetup{TwoFrequencyWF::make(setup, xi, dt_fs, scheme),
                  TemporalWF::make(setup, xi, dt_fs, scheme),
                  xi,
                  setup.omega0(),
                  dt_fs,
                  scheme,
                  kernel};
}

}  // namespace

FftTemporalField fft_temporal_wf(const SetupConfig& setup, double xi,
                                 double dt_w0, Scheme scheme, SincKernel kernel,
                                 bool convergence_check) {
  FftSetup fs = make_fft_setup(setup, xi, dt_w0, scheme, kernel);
  FftTemporalField field = run_fft(fs, 1);
  if (convergence_check) {
    FftTemporalField fine = run_fft(fs, 2);
    // coarse sample (m, l) sits at fine index (2m - n/2, 2l - n/2)... the
    // doubled grid halves the time step, so compare on the common lattice
    double peak = 0.0;
    for (const auto& z : field.f) peak = std::max(peak, std::abs(z));
    double delta = 0.0;
    std::size_t nu = field.u0.size(), nv = field.v0.size();
    std::size_t fu = fine.u0.size(), fv = fine.v0.size();
    for (std::size_t m = 0; m < nu; ++m) {
      // match identical u0 value on the refined axis
      std::size_t mf = 2 * m + fu / 2 - nu;
      if (mf >= fu) continue;
      for (std::size_t l = 0; l < nv; ++l) {
        std::size_t lf = 2 * l + fv / 2 - nv;
        if (lf >= fv) continue;
        delta = std::max(delta,
                         std::abs(field.at(m, l) - fine.at(mf, lf)) / peak);
      }
    }
    field.refine_delta = delta;
  }
  return field;
}

double fft_vs_analytic_max_err(const SetupConfig& setup, double xi,
                               double dt_w0, Scheme scheme) {
  double dt_fs = dt_w0 / setup.omega0();
  TemporalWF wf = TemporalWF::make(setup, xi, dt_fs, scheme);
  FftTemporalField field =
      fft_temporal_wf(setup, xi, dt_w0, scheme, SincKernel::gaussian_model);
  double n = wf.norm();
  double peak = 0.0;
  // compare on the inner 80% of the lattice (edges carry wraparound residue)
  std::size_t nu = field.u0.size(), nv = field.v0.size();
  std::size_t mu0 = nu / 10, mv0 = nv / 10;
  std::vector<double> errs(nu, 0.0);
  for (std::size_t m = mu0; m < nu - mu0; ++m) {
    for (std::size_t l = mv0; l < nv - mv0; ++l) {
      double t1 = 0.5 * (field.u0[m] + field.v0[l]);
      double t2 = 0.5 * (field.u0[m] - field.v0[l]);
      Complex ana = n * wf.value(t1, t2);
      peak = std::max(peak, std::abs(ana));
      errs[m] = std::max(errs[m], std::abs(field.at(m, l) - ana));
    }
  }
  double worst = 0.0;
  for (double e : errs) worst = std::max(worst, e);
  return worst / peak;
}

// ---------------------------------------------------------------------------
// Quadrature of the amplitude pipeline

double quadrature_split_probability(const SetupConfig& setup, double xi,
                                    double dt_w0, Scheme scheme,
                                    SincKernel kernel,
                                    const QuadratureSpec& spec) {
  double dt_fs = dt_w0 / setup.omega0();
  if (kernel == SincKernel::gaussian_model) {
    TemporalWF wf = TemporalWF::make(setup, xi, dt_fs, scheme);
    double n = wf.norm();
    auto fn = [&](double t1, double t2) {
      auto amps = beamsplitter_amplitudes(wf.value(t1, t2), wf.value(t2, t1), n);
      return std::norm(amps.split);
    };
    return integrate_rotated(wf, fn, spec.domain_widths, spec.abs_tol);
  }

  // exact sinc: temporal field only exists numerically; integrate the
  // antisymmetrized FFT field on its own lattice
  FftTemporalField field =
      fft_temporal_wf(setup, xi, dt_w0, scheme, SincKernel::exact_sinc);
  std::size_t nu = field.u0.size(), nv = field.v0.size();
  double acc = 0.0;
  for (std::size_t m = 0; m < nu; ++m) {
    for (std::size_t l = 1; l < nv; ++l) {  // l=0 has no mirror on the grid
      std::size_t lr = nv - l;              // v0[lr] = -v0[l]
      if (lr >= nv) continue;
      Complex f12 = field.at(m, l);
      Complex f21 = field.at(m, lr);
      acc += 0.5 * std::norm(f12 - f21);  // |A_split|^2 / N^2, N folded below
    }
  }
  // field is already normalized to sum |F|^2 du dv = 1; the 1/2 Jacobian of
  // (t1,t2) -> (u,v) cancels the factor 2 of "2 int |A|^2"... kept explicit:
  // w = int |A_s|^2 dt1 dt2 = (1/2) sum (1/2)|f12 - f21|^2 du dv
  return 0.5 * acc * field.du * field.dv;
}

// ---------------------------------------------------------------------------
// Monte Carlo

McRun monte_carlo_hom(const SetupConfig& setup, double xi, double dt_w0,
                      Scheme scheme, std::uint64_t n_samples,
                      std::uint64_t seed) {
  if (n_samples < 1000)
    throw std::invalid_argument("monte_carlo_hom: need n_samples >= 1e3");
  double dt_fs = dt_w0 / setup.omega0();
  TemporalWF wf = TemporalWF::make(setup, xi, dt_fs, scheme);
  const double norm = wf.norm();
  const double sigma_u = std::sqrt(2.0) * wf.tau_fs();
  const double sigma_v = wf.kernel_width_fs();
  const double half_xi_w0 = 0.5 * xi * setup.omega0();

  const std::uint64_t batch = 4096;
  const std::uint64_t nbatches = (n_samples + batch - 1) / batch;
  std::vector<std::uint64_t> split_counts(nbatches, 0);

  parallel_for(nbatches, [&](std::size_t b) {
    SplitMix64 rng = SplitMix64::stream(seed, b);
    std::uint64_t lo = b * batch;
    std::uint64_t hi = std::min<std::uint64_t>(lo + batch, n_samples);
    std::uint64_t count = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      // branch F(t1,t2) vs F(t2,t1): equal weights
      bool swapped = rng.uniform() < 0.5;
      double u0 = -wf.dt_fs() + sigma_u * rng.normal();
      double v0;
      for (;;) {
        // v-center -dt for the direct branch, +dt for the swapped one
        double center = swapped ? wf.dt_fs() : -wf.dt_fs();
        v0 = center + sigma_v * rng.normal();
        if (scheme == Scheme::two_slit) break;
        double c = std::cos(half_xi_w0 * (swapped ? -v0 + wf.dt_fs()
                                                  : v0 + wf.dt_fs()));
        if (rng.uniform() < c * c) break;  // cos^2 acceptance
      }
      double t1 = 0.5 * (u0 + v0);
      double t2 = 0.5 * (u0 - v0);
      auto amps =
          beamsplitter_amplitudes(wf.value(t1, t2), wf.value(t2, t1), norm);
      double ps = std::norm(amps.split);
      double pu = std::norm(amps.unsplit);
      double p = (ps + pu) > 0.0 ? ps / (ps + pu) : 0.0;
      if (rng.uniform() < p) ++count;
    }
    split_counts[b] = count;
  });

  McRun run;
  run.n_samples = n_samples;
  run.seed = seed;
  for (auto c : split_counts) run.n_split += c;
  run.n_unsplit = n_samples - run.n_split;
  run.w_split = static_cast<double>(run.n_split) / n_samples;
  run.w_unsplit = static_cast<double>(run.n_unsplit) / n_samples;
  run.std_err = std::sqrt(std::max(run.w_split * (1.0 - run.w_split), 0.0) /
                          static_cast<double>(n_samples));
  return run;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

OracleCheck make_check(const std::string& name, const std::string& params,
                       double analytic, double oracle_v, double tol,
                       bool relative = true) {
  OracleCheck c;
  c.check = name;
  c.params = params;
  c.analytic = analytic;
  c.oracle = oracle_v;
  double denom = relative ? std::max(std::fabs(analytic), 1e-300) : 1.0;
  c.rel_err = std::fabs(oracle_v - analytic) / denom;
  c.tol = tol;
  c.pass = c.rel_err <= tol;
  return c;
}

std::string param_str(double xi, double dt_w0, Scheme scheme) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "xi=%g omega0*dt=%g scheme=%s", xi, dt_w0,
                to_string(scheme).c_str());
  return buf;
}

// w_unsplit from the + branch of the closed forms, evaluated independently of
// split_probability so the sum rule is a real check.
double unsplit_from_closed_form(const HomParams& p, Scheme scheme,
                                double dt_w0) {
  double dt = p.dt_fs(dt_w0);
  double g = std::exp(-dt * dt / (2.0 * p.s_fs * p.s_fs));
  if (scheme == Scheme::two_slit) return 0.5 * (1.0 + p.k_static * g);
  return 0.5 * (1.0 + g * (std::cos(p.xi * dt_w0) + p.k_static) /
                          (1.0 + p.k_static));
}

// Run a suite section; an exception becomes a single failed check instead of
// killing the whole report (e.g. corrupted crystal coefficients).
template <typename Fn>
void guarded(std::vector<OracleCheck>& checks, const char* section, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    OracleCheck c;
    c.check = std::string("aborted:") + section;
    c.params = e.what();
    c.rel_err = std::numeric_limits<double>::infinity();
    c.pass = false;
    checks.push_back(c);
  }
}

// FWHM of |F|^2 along v: gaussian model (analytic 2 sqrt(2 ln 2) s) over the
// exact-sinc boxcar profile measured on the FFT lattice.
double exact_sinc_fwhm_ratio(const SetupConfig& setup, double xi) {
  FftTemporalField field = fft_temporal_wf(setup, xi, 0.0, Scheme::two_slit,
                                           SincKernel::exact_sinc);
  std::size_t nu = field.u0.size(), nv = field.v0.size();
  std::size_t m_best = 0;
  double best = -1.0;
  for (std::size_t m = 0; m < nu; ++m) {
    double a = std::abs(field.at(m, nv / 2));
    if (a > best) {
      best = a;
      m_best = m;
    }
  }
  std::vector<double> prof(nv);
  double pmax = 0.0;
  for (std::size_t l = 0; l < nv; ++l) {
    prof[l] = std::norm(field.at(m_best, l));
    pmax = std::max(pmax, prof[l]);
  }
  double half = 0.5 * pmax;
  double lo = std::nan(""), hi = std::nan("");
  for (std::size_t l = 0; l + 1 < nv; ++l) {
    if ((prof[l] < half) != (prof[l + 1] < half)) {
      double t = (half - prof[l]) / (prof[l + 1] - prof[l]);
      double xc = field.v0[l] + t * (field.v0[l + 1] - field.v0[l]);
      if (std::isnan(lo)) lo = xc;
      hi = xc;
    }
  }
  if (std::isnan(lo) || std::isnan(hi) || hi <= lo) return 0.0;
  double dt_fs = 0.0;
  TemporalWF wf = TemporalWF::make(setup, xi, dt_fs, Scheme::two_slit);
  double fwhm_gauss = 2.0 * std::sqrt(2.0 * std::log(2.0)) * wf.kernel_width_fs();
  return fwhm_gauss / (hi - lo);
}

}  // namespace

void to_json(nlohmann::json& j, const OracleCheck& c) {
  j = nlohmann::json{{"check", c.check},     {"params", c.params},
                     {"analytic", c.analytic}, {"oracle", c.oracle},
                     {"rel_err", c.rel_err},   {"tol", c.tol},
                     {"pass", c.pass}};
}

std::vector<OracleCheck> run_suite(const SetupConfig& setup, bool quick,
                                   std::uint64_t seed) {
  std::vector<OracleCheck> checks;
  const auto& crystal = setup.crystal;
  const double lam_p = setup.lambda_p_um;

  // --- anchor checks -------------------------------------------------------
  guarded(checks, "anchors", [&] {
    double xm = xi_max(crystal, lam_p);
    checks.push_back(
        make_check("anchor:xi_max", "BBO preset", 0.9391, xm, 1e-3 / 0.9391));
    checks.push_back(make_check("anchor:lambda_minus_um", "BBO preset", 13.29,
                                2.0 * lam_p / (1.0 - xm), 0.02 / 13.29));
    auto locus = scan_collinear_locus(crystal, lam_p);
    checks.push_back(make_check("anchor:phi_coll_min", "over xi grid", 0.37734,
                                locus.phi_min, 0.003 / 0.37734));
    checks.push_back(make_check("anchor:phi_coll_max", "over xi grid", 0.678486,
                                locus.phi_max, 0.003 / 0.678486));
    checks.push_back(make_check("anchor:xi_at_neff_max", "golden refinement",
                                0.8142, locus.xi_at_neff_max, 0.005 / 0.8142));
    double xi_zero = a_minus_zero(crystal, lam_p, setup.phi0_rad, 0.5, 0.93);
    checks.push_back(make_check("anchor:a_minus_zero", "bisection", 0.8142,
                                xi_zero, 0.005 / 0.8142));
  });

  // --- dispersion sanity across the window ---------------------------------
  guarded(checks, "indices_sane", [&] {
    bool ok = true;
    for (int i = 0; i <= 400; ++i) {
      double lam = crystal.window_lo_um +
                   (crystal.window_hi_um - crystal.window_lo_um) * i / 400.0;
      double no = index_ordinary(crystal, lam);
      double ne = index_extraordinary(crystal, lam);
      if (!std::isfinite(no) || !std::isfinite(ne) || no <= 0.0 || ne <= 0.0)
        ok = false;
      if (lam <= 3.5 && (no <= 1.0 || ne <= 1.0 || ne >= no)) ok = false;
    }
    checks.push_back(make_check("invariant:indices_sane", "400-pt window scan",
                                1.0, ok ? 1.0 : 0.0, 0.0));
  });

  // --- pinned parameter grid ------------------------------------------------
  const std::vector<double> xis = quick ? std::vector<double>{0.04, 0.1}
                                        : std::vector<double>{0.01, 0.04, 0.1,
                                                              0.6, 0.81};
  struct Case {
    double xi, dt_w0;
    Scheme scheme;
  };
  std::vector<Case> cases;
  for (double xi : xis) {
    auto p = HomParams::make(setup, xi);
    std::vector<double> dts = {0.0, p.t_osc_w0, 5.0 * p.t_osc_w0,
                               3.0 * p.t_decoh_w0};
    if (quick) dts = {0.0, p.t_osc_w0};
    for (double dt : dts)
      for (Scheme s : {Scheme::two_slit, Scheme::four_slit})
        cases.push_back({xi, dt, s});
  }

  // probability invariants (cheap, sequential)
  for (const auto& c : cases) {
    auto p = HomParams::make(setup, c.xi);
    double ws = split_probability(p, c.scheme, c.dt_w0);
    double wu = unsplit_from_closed_form(p, c.scheme, c.dt_w0);
    checks.push_back(make_check("invariant:w_split+w_unsplit",
                                param_str(c.xi, c.dt_w0, c.scheme), 1.0,
                                ws + wu, 1e-12));
    bool in01 = ws >= 0.0 && ws <= 1.0 && wu >= 0.0 && wu <= 1.0;
    checks.push_back(make_check("invariant:probabilities_in_[0,1]",
                                param_str(c.xi, c.dt_w0, c.scheme), 1.0,
                                in01 ? 1.0 : 0.0, 0.0));
  }

  // quadrature equivalence (parallel over cases)
  {
    std::vector<OracleCheck> qc(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
      const auto& c = cases[i];
      auto p = HomParams::make(setup, c.xi);
      double analytic = split_probability(p, c.scheme, c.dt_w0);
      double quad = quadrature_split_probability(setup, c.xi, c.dt_w0, c.scheme,
                                                 SincKernel::gaussian_model);
      bool relative = analytic > 1e-12;
      qc[i] = make_check("oracle:quadrature_vs_closed_form",
                         param_str(c.xi, c.dt_w0, c.scheme), analytic, quad,
                         relative ? 1e-6 : 1e-9, relative);
    });
    checks.insert(checks.end(), qc.begin(), qc.end());
  }

  // density integral equals the closed-form probability
  {
    std::vector<Case> dcases;
    for (double xi : xis) {
      auto p = HomParams::make(setup, xi);
      for (Scheme s : {Scheme::two_slit, Scheme::four_slit})
        dcases.push_back({xi, 2.0 * p.t_decoh_w0, s});
    }
    std::vector<OracleCheck> qc(dcases.size());
    parallel_for(dcases.size(), [&](std::size_t i) {
      const auto& c = dcases[i];
      auto p = HomParams::make(setup, c.xi);
      double analytic = split_probability(p, c.scheme, c.dt_w0);
      double integral =
          density_integral_by_quadrature(setup, c.xi, c.dt_w0, c.scheme);
      qc[i] = make_check("oracle:density_integral_vs_w_split",
                         param_str(c.xi, c.dt_w0, c.scheme), analytic, integral,
                         1e-3);
    });
    checks.insert(checks.end(), qc.begin(), qc.end());
  }

  // temporal-wavefunction normalization on a parameter grid
  {
    int nxi = quick ? 2 : 10, ndt = quick ? 2 : 10;
    std::vector<Case> ncases;
    for (int i = 0; i < nxi; ++i) {
      double xi = 0.02 * std::pow(10.0, i / std::max(1.0, nxi - 1.0));  // 0.02..0.2
      auto p = HomParams::make(setup, xi);
      for (int j = 0; j < ndt; ++j) {
        double dt = p.t_decoh_w0 * (3.0 * j / std::max(1, ndt - 1));
        for (Scheme s : {Scheme::two_slit, Scheme::four_slit})
          ncases.push_back({xi, dt, s});
      }
    }
    std::vector<OracleCheck> qc(ncases.size());
    parallel_for(ncases.size(), [&](std::size_t i) {
      const auto& c = ncases[i];
      double total =
          normalization_by_quadrature(setup, c.xi, c.dt_w0, c.scheme);
      qc[i] = make_check("oracle:normalization",
                         param_str(c.xi, c.dt_w0, c.scheme), 1.0, total, 1e-8);
    });
    checks.insert(checks.end(), qc.begin(), qc.end());
  }

  // FFT vs analytic temporal wavefunction
  {
    std::vector<Case> fcases;
    for (double xi : (quick ? std::vector<double>{0.1}
                            : std::vector<double>{0.04, 0.1, 0.6})) {
      auto p = HomParams::make(setup, xi);
      for (double dt : {0.0, p.t_osc_w0})
        for (Scheme s : {Scheme::two_slit, Scheme::four_slit})
          fcases.push_back({xi, dt, s});
    }
    std::vector<OracleCheck> qc(fcases.size());
    parallel_for(fcases.size(), [&](std::size_t i) {
      const auto& c = fcases[i];
      double err = fft_vs_analytic_max_err(setup, c.xi, c.dt_w0, c.scheme);
      qc[i] = make_check("oracle:fft_vs_temporal_wf",
                         param_str(c.xi, c.dt_w0, c.scheme), 0.0, err, 1e-6,
                         false);
    });
    checks.insert(checks.end(), qc.begin(), qc.end());
  }

  // exact-sinc kernel: quantify the gaussian-model fit on observables
  {
    double w_gauss = split_probability(HomParams::make(setup, 0.1),
                                       Scheme::two_slit, 0.0);
    double w_sinc = quadrature_split_probability(
        setup, 0.1, 0.0, Scheme::two_slit, SincKernel::exact_sinc);
    checks.push_back(make_check("oracle:exact_sinc_w_split",
                                param_str(0.1, 0.0, Scheme::two_slit), w_gauss,
                                w_sinc, 0.05));
    checks.push_back(make_check("oracle:exact_sinc_fwhm_ratio",
                                param_str(0.1, 0.0, Scheme::two_slit), 1.0,
                                exact_sinc_fwhm_ratio(setup, 0.1), 0.10));
  }

  // Monte Carlo within 3 binomial standard errors
  if (!quick) {
    std::vector<Case> mcases;
    for (double xi : xis) {
      auto p = HomParams::make(setup, xi);
      for (double dt : {0.0, 3.0 * p.t_decoh_w0})
        for (Scheme s : {Scheme::two_slit, Scheme::four_slit})
          mcases.push_back({xi, dt, s});
    }
    std::vector<OracleCheck> qc(mcases.size());
    parallel_for(mcases.size(), [&](std::size_t i) {
      const auto& c = mcases[i];
      auto p = HomParams::make(setup, c.xi);
      double analytic = split_probability(p, c.scheme, c.dt_w0);
      McRun run = monte_carlo_hom(setup, c.xi, c.dt_w0, c.scheme, 100000,
                                  seed + i);
      double sigma = std::sqrt(std::max(analytic * (1.0 - analytic), 0.0) /
                               static_cast<double>(run.n_samples));
      OracleCheck chk;
      chk.check = "oracle:monte_carlo_3sigma";
      chk.params = param_str(c.xi, c.dt_w0, c.scheme);
      chk.analytic = analytic;
      chk.oracle = run.w_split;
      chk.rel_err = std::fabs(run.w_split - analytic);
      chk.tol = 3.0 * sigma;
      chk.pass = chk.rel_err <= std::max(chk.tol, 1e-12);
      qc[i] = chk;
    });
    checks.insert(checks.end(), qc.begin(), qc.end());
  }

  return checks;
}

}  // namespace spdc::oracle
