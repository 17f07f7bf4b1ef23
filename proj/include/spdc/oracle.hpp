#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "spdc/biphoton.hpp"
#include "spdc/config.hpp"
#include "spdc/hom.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spdc::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-9;      // on probabilities
  double domain_widths = 8.0; // integration range in kernel widths
};

/// Split probability by 2-D quadrature of |A_split|^2 built from the temporal
/// wavefunction (gaussian_model kernel), or from the FFT-transformed
/// exact-sinc field.  Independent check of the closed forms.
double quadrature_split_probability(const SetupConfig& setup, double xi,
                                    double dt_w0, Scheme scheme,
                                    SincKernel kernel,
                                    const QuadratureSpec& spec = {});

/// 2 * integral |N F|^2 dt1 dt2 by adaptive quadrature; should be 1.
double normalization_by_quadrature(const SetupConfig& setup, double xi,
                                   double dt_w0, Scheme scheme);

/// Probability-normalized coincidence density integrated over t1 - t2.
double density_integral_by_quadrature(const SetupConfig& setup, double xi,
                                      double dt_w0, Scheme scheme);

/// Temporal field sampled by a 2-D FFT of the two-frequency wavefunction on a
/// rotated (nu+, nu-) grid.  Outputs live on the (u0, v0) = (t1+t2, t1-t2)
/// lattice; carrier phase is restored so samples compare directly against the
/// analytic F.  Normalized discretely to 2 sum |F|^2 du dv / 2 = 1.
struct FftTemporalField {
  std::vector<double> u0;  // fs
  std::vector<double> v0;  // fs
  std::vector<std::complex<double>> f;  // row-major [u0][v0], normalized
  double du = 0.0, dv = 0.0;
  double refine_delta = 0.0;  // max |change| under grid doubling, vs peak

  std::complex<double> at(std::size_t i, std::size_t j) const {
    return f[i * v0.size() + j];
  }
};

FftTemporalField fft_temporal_wf(const SetupConfig& setup, double xi,
                                 double dt_w0, Scheme scheme, SincKernel kernel,
                                 bool convergence_check = false);

/// Pointwise comparison against the analytic temporal wavefunction:
/// max |N_fft F_fft - N F| / max |N F| over the lattice.
double fft_vs_analytic_max_err(const SetupConfig& setup, double xi,
                               double dt_w0, Scheme scheme);

/// Monte-Carlo HOM run: arrival times sampled from |Psi|^2, split/unsplit
/// assigned by the conditional probability at the beamsplitter, counted.
struct McRun {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_split = 0;
  std::uint64_t n_unsplit = 0;
  double w_split = 0.0;
  double w_unsplit = 0.0;
  double std_err = 0.0;  // binomial, from the estimate
};

McRun monte_carlo_hom(const SetupConfig& setup, double xi, double dt_w0,
                      Scheme scheme, std::uint64_t n_samples,
                      std::uint64_t seed);

/// One oracle-vs-analytic comparison, JSON-serializable.
struct OracleCheck {
  std::string check;
  std::string params;
  double analytic = 0.0;
  double oracle = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

void to_json(nlohmann::json& j, const OracleCheck& c);

/// Full verification suite: anchor checks, quadrature / FFT / MC equivalence
/// on the pinned grid (xi in {0.01, 0.04, 0.1, 0.6, 0.81}, dt in
/// {0, T_osc, 5 T_osc, 3 T_decoh}), probability and normalization invariants.
/// quick = true skips Monte Carlo and thins the grids.
std::vector<OracleCheck> run_suite(const SetupConfig& setup, bool quick,
                                   std::uint64_t seed);

}  // namespace spdc::oracle
