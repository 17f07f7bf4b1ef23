#pragma once

#include <complex>

#include "spdc/config.hpp"
#include "spdc/groupdelay.hpp"
#include "spdc/phasematch.hpp"

namespace spdc {

using Complex = std::complex<double>;

/// Full angular-frequency biphoton amplitude for a single measurement plane:
/// pump spectral Gaussian x pump angular Gaussian x phase-matching sinc x
/// top-hat slit form factors, plus the term with photon labels transposed.
/// Unnormalized.  The sinc argument uses the two-sinc split consistent with
/// its quadratic origin: (theta~1 - theta~2 - 2 theta0) / (2 (dtheta)_L)
/// + (L/2c)[A+ nu+ - A- nu-].
class AngularFrequencyWF {
 public:
  /// Requires the noncollinear regime.
  static AngularFrequencyWF make(const SetupConfig& setup, double xi);

  /// theta_{1,2}x in rad (free-space, signed), omega_{1,2} in rad/fs.
  Complex value(double theta1x, double theta2x, double omega1,
                double omega2) const;

  const ConeGeometry& geometry() const { return geom_; }
  double slit_halfwidth() const { return slit_half_; }

 private:
  double xi_ = 0.0;
  double omega0_ = 0.0;
  double tau_fs_ = 0.0;
  double angular_scale_ = 0.0;  // pi w / lambda_p
  double l_over_2c_ = 0.0;
  double a_plus_ = 0.0, a_minus_ = 0.0;
  ConeGeometry geom_;
  double slit_half_ = 0.0;

  double term(double tha, double thb, double wa, double wb) const;
};

enum class SincKernel { exact_sinc, gaussian_model };

/// Reduced two-frequency wavefunction (valid for long pump pulses and slit
/// width below (dtheta)_L):
///   Phi = exp[-(nu+)^2 tau^2 / 2] sinc[(L A-/2c)(omega1-omega2-xi omega0)]
///         e^{i omega1 dt}
/// Detunings nu+ = omega1+omega2-omega0 and nu- = omega1-omega2-xi omega0 are
/// the internal variables (no cancellation at optical carrier scale).  The
/// four-slit variant adds the xi -> -xi mirror term.
class TwoFrequencyWF {
 public:
  static TwoFrequencyWF make(const SetupConfig& setup, double xi, double dt_fs,
                             Scheme scheme);

  Complex value(double omega1, double omega2,
                SincKernel kernel = SincKernel::exact_sinc) const;
  /// Same amplitude up to the constant carrier phase exp(i omega_h dt).
  Complex value_detuned(double nu_plus, double nu_minus,
                        SincKernel kernel = SincKernel::exact_sinc) const;

  double sinc_half_scale() const { return a_; }  // L A- / 2c, fs
  double omega_high() const { return point_.omega_high; }
  double omega_low() const { return point_.omega_low; }
  Scheme scheme() const { return scheme_; }

 private:
  NondegeneracyPoint point_;
  Scheme scheme_ = Scheme::two_slit;
  double dt_fs_ = 0.0;
  double tau_fs_ = 0.0;
  double a_ = 0.0;  // L A- / 2c (signed)
};

/// Temporal wavefunction F(t1, t2) after the Gaussian sinc model
/// (sinc x ~ exp(-alpha x^2), alpha = 0.19292):
///   two-slit : exp[i xi w0 (t1-t2+dt)/2] G(t1,t2)
///   four-slit: cos[xi w0 (t1-t2+dt)/2]  G(t1,t2)
///   G = exp[-(t1+t2+dt)^2/(8 tau^2) - (t1-t2+dt)^2/(4 s^2)],
/// s = sqrt(alpha) L |A-| / c.  The two-column pair-path label is carried by
/// the argument order: value(t1,t2) is the (+,-) branch, value(t2,t1) the
/// (-,+) one.  Immutable; the normalization constant is computed once here.
class TemporalWF {
 public:
  /// Throws UnsupportedRegimeError unless pulse_regime is long_pulse and
  /// DegenerateWidthError when A_minus vanishes.
  static TemporalWF make(const SetupConfig& setup, double xi, double dt_fs,
                         Scheme scheme);

  Complex value(double t1_fs, double t2_fs) const;

  /// Analytic N = (2 integral |F|^2 dt1 dt2)^(-1/2):
  ///   two-slit : (2 sqrt(2) pi tau s)^(-1/2)
  ///   four-slit: (sqrt(2) pi tau s (1 + K))^(-1/2),
  ///   K = exp(-xi^2 omega0^2 s^2 / 2).
  double norm() const { return norm_; }

  Scheme scheme() const { return scheme_; }
  double xi() const { return xi_; }
  double omega0() const { return omega0_; }
  double dt_fs() const { return dt_fs_; }
  double tau_fs() const { return tau_fs_; }
  double kernel_width_fs() const { return s_fs_; }  // s
  double static_overlap() const { return k_static_; }  // K
  bool model_fragile() const { return model_fragile_; }

 private:
  Scheme scheme_ = Scheme::two_slit;
  double xi_ = 0.0, omega0_ = 0.0, dt_fs_ = 0.0, tau_fs_ = 0.0, s_fs_ = 0.0;
  double k_static_ = 0.0, norm_ = 0.0;
  bool model_fragile_ = false;
};

/// Normalization constant of a temporal wavefunction (the analytic closed
/// form; see oracle::normalization_by_quadrature for the numeric cross-check).
inline double normalize(const TemporalWF& wf) { return wf.norm(); }

}  // namespace spdc
