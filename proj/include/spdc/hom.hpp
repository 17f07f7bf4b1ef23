#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spdc/biphoton.hpp"
#include "spdc/config.hpp"

namespace spdc {

/// 50-50 beamsplitter output amplitudes from the two pair-path components:
/// A_{unsplit,split} = (N/sqrt(2)) (F(t1,t2) +- F(t2,t1)).
struct BeamsplitterAmplitudes {
  Complex unsplit;
  Complex split;
};

BeamsplitterAmplitudes beamsplitter_amplitudes(Complex f12, Complex f21,
                                               double norm);

/// Scalars the closed-form probabilities depend on.
struct HomParams {
  double xi = 0.0;
  double omega0 = 0.0;       // rad/fs
  double s_fs = 0.0;         // sqrt(alpha) L |A_minus| / c
  double k_static = 0.0;     // exp(-xi^2 omega0^2 s^2 / 2)
  double t_osc_w0 = 0.0;     // omega0 T_osc = 2 pi / xi
  double t_decoh_w0 = 0.0;   // omega0 sqrt(2) s
  bool model_fragile = false;

  static HomParams make(const SetupConfig& setup, double xi);
  double dt_fs(double dt_w0) const { return dt_w0 / omega0; }
};

/// w_split = 1/2 {1 - K exp[-dt^2/(2 s^2)]}; dt in omega0^-1 units.
double split_probability_two_slit(const HomParams& p, double dt_w0);
/// w_split = 1/2 {1 - exp[-dt^2/(2 s^2)] [cos(xi w0 dt) + K]/(1 + K)}.
double split_probability_four_slit(const HomParams& p, double dt_w0);
double split_probability(const HomParams& p, Scheme scheme, double dt_w0);
inline double unsplit_probability(const HomParams& p, Scheme s, double dt_w0) {
  return 1.0 - split_probability(p, s, dt_w0);
}

/// Coincidence probability densities dw_split/d(omega0 (t1-t2)), normalized so
/// that the integral over omega0 (t1-t2) is the split probability.
/// The two-slit cosh form is evaluated through the regrouped identity
/// 2 e^{-(m^2+dt^2)/2s^2} cosh(m dt/s^2) = e^{-(m-dt)^2/2s^2} + e^{-(m+dt)^2/2s^2},
/// which cannot overflow.
double coincidence_density_two_slit(const HomParams& p, double dt_w0,
                                    double m_w0);
/// |cos[..](m+dt) G(m+dt) - cos[..](m-dt) G(m-dt)|^2 form; identically zero at
/// dt = 0.
double coincidence_density_four_slit(const HomParams& p, double dt_w0,
                                     double m_w0);
double coincidence_density(const HomParams& p, Scheme scheme, double dt_w0,
                           double m_w0);

enum class DensityNorm { probability, unit };

/// Sampled curve in omega0-normalized units.
struct HomCurve {
  Scheme scheme = Scheme::two_slit;
  double xi = 0.0;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;  // omega0 * dt or omega0 * (t1 - t2)
  std::vector<double> y;
  double t_osc_w0 = 0.0;
  double t_decoh_w0 = 0.0;
  bool model_fragile = false;
};

struct CurveOptions {
  double points_per_osc = 16.0;
  double span_decoh = 6.0;  // span = max(span_decoh*T_decoh, span_osc*T_osc)
  double span_osc = 4.0;
  double span_override_w0 = 0.0;  // > 0: use this half-span instead
};

HomCurve split_probability_curve(const SetupConfig& setup, double xi,
                                 Scheme scheme, const CurveOptions& opt = {});

/// Density vs omega0 (t1-t2) at fixed delay; the grid is widened by |dt| so
/// combs centered at +-dt stay inside.
HomCurve coincidence_density_curve(const SetupConfig& setup, double xi,
                                   Scheme scheme, double dt_w0,
                                   DensityNorm norm = DensityNorm::unit,
                                   const CurveOptions& opt = {});

/// Optional detector-resolution smoothing: Gaussian convolution with sigma in
/// the curve's x units.  Models counters too slow to resolve T_osc.
void apply_detector_resolution(HomCurve& curve, double sigma_w0);

/// Comb metrology of a sampled curve: peak positions (parabolically refined),
/// oscillation period (median adjacent-peak gap), envelope FWHM (half-max
/// crossings of the peak-height polyline above the edge baseline), comb count
/// and centers (max-filtered envelope, lobes split by a valley below 0.7 of
/// the smaller lobe).
struct CombReport {
  int comb_count = 0;
  double period = 0.0;          // x units; 0 when < 2 peaks
  double envelope_fwhm = 0.0;   // 0 when undefined
  double comb_separation = 0.0; // 0 unless comb_count == 2
  std::vector<double> peak_positions;
  std::vector<double> comb_centers;
};

/// Throws ResolutionError when the grid is coarser than 8 points per expected
/// T_osc (curve metadata) or peaks land closer than 4 samples apart.
CombReport analyze_comb(const HomCurve& curve);

}  // namespace spdc
