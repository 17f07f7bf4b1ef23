#include "spdc/biphoton.hpp"

#include <cmath>

#include "spdc/errors.hpp"
#include "spdc/units.hpp"

namespace spdc {

AngularFrequencyWF AngularFrequencyWF::make(const SetupConfig& setup,
                                            double xi) {
  AngularFrequencyWF w;
  w.geom_ = cone_geometry(setup.crystal, setup, xi);
  if (w.geom_.regime != Regime::noncollinear)
    throw UnsupportedRegimeError(
        "full angular-frequency wavefunction requires the noncollinear regime");
  auto coeffs = GroupDelayCoefficients::compute(setup.crystal, setup.lambda_p_um,
                                                setup.phi0_rad, xi);
  w.xi_ = xi;
  w.omega0_ = setup.omega0();
  w.tau_fs_ = setup.tau_fs();
  w.angular_scale_ = kPi * setup.waist_um / setup.lambda_p_um;
  w.l_over_2c_ = setup.L_um() / (2.0 * kSpeedOfLight);
  w.a_plus_ = coeffs.a_plus;
  w.a_minus_ = coeffs.a_minus;
  w.slit_half_ = 0.5 * setup.slit_width_frac * w.geom_.delta_theta_L;
  return w;
}

double AngularFrequencyWF::term(double tha, double thb, double wa,
                                double wb) const {
  // slot a carries the higher-frequency photon: theta~ = (1+xi) theta
  double ta = (1.0 + xi_) * tha;
  double tb = (1.0 - xi_) * thb;
  double nu_p = wa + wb - omega0_;
  double nu_m = wa - wb - xi_ * omega0_;

  double spec = std::exp(-0.5 * nu_p * nu_p * tau_fs_ * tau_fs_);
  double sum = ta + tb;
  double ang = std::exp(-0.5 * angular_scale_ * angular_scale_ * sum * sum);
  double arg = (ta - tb - 2.0 * geom_.theta0) / (2.0 * geom_.delta_theta_L) +
               l_over_2c_ * (a_plus_ * nu_p - a_minus_ * nu_m);
  double slits = (std::fabs(tha - geom_.theta_inner) <= slit_half_ &&
                  std::fabs(thb + geom_.theta_outer) <= slit_half_)
                     ? 1.0
                     : 0.0;
  return spec * ang * sinc(arg) * slits;
}

Complex AngularFrequencyWF::value(double theta1x, double theta2x, double omega1,
                                  double omega2) const {
  // second term: photon labels (angles and frequencies) transposed
  return term(theta1x, theta2x, omega1, omega2) +
         term(theta2x, theta1x, omega2, omega1);
}

TwoFrequencyWF TwoFrequencyWF::make(const SetupConfig& setup, double xi,
                                    double dt_fs, Scheme scheme) {
  auto coeffs = GroupDelayCoefficients::compute(setup.crystal, setup.lambda_p_um,
                                                setup.phi0_rad, xi);
  if (pulse_regime(setup, coeffs) != PulseRegime::long_pulse)
    throw UnsupportedRegimeError(
        "two-frequency wavefunction requires long pump pulses (tau >= 10 tau_gr)");
  TwoFrequencyWF w;
  w.point_ = NondegeneracyPoint::make(setup.lambda_p_um, xi);
  w.scheme_ = scheme;
  w.dt_fs_ = dt_fs;
  w.tau_fs_ = setup.tau_fs();
  w.a_ = setup.L_um() * coeffs.a_minus / (2.0 * kSpeedOfLight);
  return w;
}

namespace {
double kernel_eval(SincKernel k, double x) {
  return k == SincKernel::exact_sinc ? sinc(x)
                                     : std::exp(-kSincFitAlpha * x * x);
}
}  // namespace

Complex TwoFrequencyWF::value_detuned(double nu_plus, double nu_minus,
                                      SincKernel kernel) const {
  double spec = std::exp(-0.5 * nu_plus * nu_plus * tau_fs_ * tau_fs_);
  double kern = kernel_eval(kernel, a_ * nu_minus);
  if (scheme_ == Scheme::four_slit) {
    // mirror term xi -> -xi: sinc argument shifts by 2 xi omega0
    kern += kernel_eval(kernel,
                        a_ * (nu_minus + 2.0 * point_.xi * point_.omega0));
  }
  // delay phase e^{i omega1 dt} up to the constant e^{i omega_h dt}
  double phase = 0.5 * (nu_plus + nu_minus) * dt_fs_;
  return spec * kern * Complex{std::cos(phase), std::sin(phase)};
}

Complex TwoFrequencyWF::value(double omega1, double omega2,
                              SincKernel kernel) const {
  double nu_plus = omega1 + omega2 - point_.omega0;
  double nu_minus = omega1 - omega2 - point_.xi * point_.omega0;
  double ph = point_.omega_high * dt_fs_;
  return value_detuned(nu_plus, nu_minus, kernel) *
         Complex{std::cos(ph), std::sin(ph)};
}

TemporalWF TemporalWF::make(const SetupConfig& setup, double xi, double dt_fs,
                            Scheme scheme) {
  auto coeffs = GroupDelayCoefficients::compute(setup.crystal, setup.lambda_p_um,
                                                setup.phi0_rad, xi);
  if (pulse_regime(setup, coeffs) != PulseRegime::long_pulse)
    throw UnsupportedRegimeError(
        "temporal wavefunction requires long pump pulses (tau >= 10 tau_gr)");
  if (std::fabs(coeffs.a_minus) < 1e-12)
    throw DegenerateWidthError(
        "temporal wavefunction degenerates at A_minus = 0");

  TemporalWF w;
  w.scheme_ = scheme;
  w.xi_ = xi;
  w.omega0_ = setup.omega0();
  w.dt_fs_ = dt_fs;
  w.tau_fs_ = setup.tau_fs();
  w.s_fs_ = std::sqrt(kSincFitAlpha) * setup.L_um() *
            std::fabs(coeffs.a_minus) / kSpeedOfLight;
  w.model_fragile_ = coeffs.model_fragile;
  double arg = xi * w.omega0_ * w.s_fs_;
  w.k_static_ = std::exp(-0.5 * arg * arg);
  if (scheme == Scheme::two_slit) {
    w.norm_ = 1.0 / std::sqrt(2.0 * std::sqrt(2.0) * kPi * w.tau_fs_ * w.s_fs_);
  } else {
    w.norm_ = 1.0 / std::sqrt(std::sqrt(2.0) * kPi * w.tau_fs_ * w.s_fs_ *
                              (1.0 + w.k_static_));
  }
  return w;
}

Complex TemporalWF::value(double t1_fs, double t2_fs) const {
  double u = t1_fs + t2_fs + dt_fs_;
  double v = t1_fs - t2_fs + dt_fs_;
  double gauss = std::exp(-u * u / (8.0 * tau_fs_ * tau_fs_) -
                          v * v / (4.0 * s_fs_ * s_fs_));
  double ph = 0.5 * xi_ * omega0_ * v;
  if (scheme_ == Scheme::two_slit)
    return gauss * Complex{std::cos(ph), std::sin(ph)};
  return Complex{gauss * std::cos(ph), 0.0};
}

}  // namespace spdc
