#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace spdc::num {

// Brent's method. a and b must bracket the root: f(a) * f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter = 200);

// Scan [a, b] in n uniform steps for a sign change, then polish with Brent.
// Returns NaN when no sign change is found.
double scan_and_bisect(const std::function<double(double)>& f, double a,
                       double b, int n, double xtol);

// Golden-section minimum of f on [a, b] to interval width xtol.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // accumulated estimate
  bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol = 1e-12, int max_depth = 48);

// Same, but the interval is pre-split into panels of width <= seed_width
// before adapting.  Keeps oscillatory integrands from fooling the error
// estimate on wide panels.
QuadResult integrate_seeded(const std::function<double(double)>& f, double a,
                            double b, double seed_width, double abs_tol,
                            double rel_tol = 1e-12, int max_depth = 48);

// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace spdc::num
