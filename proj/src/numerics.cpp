#include "spdc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spdc::num {

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::invalid_argument("brent_root: endpoints do not bracket a root");

  if (std::fabs(fa) < std::fabs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a, s = b, fs = fb;
  bool bisected = true;

  for (int it = 0; it < max_iter; ++it) {
    if (fa != fc && fb != fc) {
      // inverse quadratic interpolation
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }

    double lo = (3.0 * a + b) / 4.0;
    bool ok = (s > std::min(lo, b) && s < std::max(lo, b));
    if (!ok || (bisected && std::fabs(s - b) >= std::fabs(b - c) / 2.0) ||
        (!bisected && std::fabs(s - b) >= std::fabs(c - d) / 2.0)) {
      s = 0.5 * (a + b);
      bisected = true;
    } else {
      bisected = false;
    }

    fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::fabs(fa) < std::fabs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
    if (fb == 0.0 || std::fabs(b - a) < xtol) return b;
  }
  return b;
}

double scan_and_bisect(const std::function<double(double)>& f, double a,
                       double b, int n, double xtol) {
  double x0 = a, f0 = f(a);
  if (f0 == 0.0) return a;
  for (int i = 1; i <= n; ++i) {
    double x1 = a + (b - a) * static_cast<double>(i) / n;
    double f1 = f(x1);
    if (f1 == 0.0) return x1;
    if (f0 * f1 < 0.0) return brent_root(f, x0, x1, xtol);
    x0 = x1;
    f0 = f1;
  }
  return std::nan("");
}

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

double gk15(const std::function<double(double)>& f, double a, double b,
            double* err) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fc = f(mid);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kXgk[i];
    double fsum = f(mid - dx) + f(mid + dx);
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  double diff = std::fabs(kron - gauss);
  *err = (diff > 0.0) ? 200.0 * diff * std::sqrt(diff) : 0.0;
  return kron;
}

struct Panel {
  double a, b, value, err;
  int depth;
};

QuadResult adapt(const std::function<double(double)>& f,
                 std::vector<Panel> stack, double abs_tol, double rel_tol,
                 int max_depth) {
  QuadResult out;
  KahanSum sum;
  KahanSum errsum;
  double scale = 0.0;
  for (const Panel& p : stack) scale += std::fabs(p.value);

  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double tol = std::max(abs_tol, rel_tol * std::max(scale, 1e-300));
    // per-panel share of the tolerance, proportional to width
    double local = tol * (p.b - p.a);
    if (p.err <= local || p.depth >= max_depth) {
      if (p.depth >= max_depth && p.err > local) out.converged = false;
      sum.add(p.value);
      errsum.add(p.err);
      continue;
    }
    double mid = 0.5 * (p.a + p.b);
    Panel l{p.a, mid, 0, 0, p.depth + 1};
    Panel r{mid, p.b, 0, 0, p.depth + 1};
    l.value = gk15(f, l.a, l.b, &l.err);
    r.value = gk15(f, r.a, r.b, &r.err);
    scale += std::fabs(l.value) + std::fabs(r.value) - std::fabs(p.value);
    stack.push_back(l);
    stack.push_back(r);
  }
  out.value = sum.value();
  out.error = errsum.value();
  return out;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_depth) {
  Panel p{a, b, 0, 0, 0};
  p.value = gk15(f, a, b, &p.err);
  // normalize tolerance to the total width so panel shares add up
  return adapt(f, {p}, abs_tol / (b - a), rel_tol / (b - a), max_depth);
}

QuadResult integrate_seeded(const std::function<double(double)>& f, double a,
                            double b, double seed_width, double abs_tol,
                            double rel_tol, int max_depth) {
  int n = std::max(1, static_cast<int>(std::ceil((b - a) / seed_width)));
  std::vector<Panel> panels;
  panels.reserve(n);
  for (int i = 0; i < n; ++i) {
    Panel p{a + (b - a) * i / n, a + (b - a) * (i + 1) / n, 0, 0, 0};
    p.value = gk15(f, p.a, p.b, &p.err);
    panels.push_back(p);
  }
  return adapt(f, std::move(panels), abs_tol / (b - a), rel_tol / (b - a),
               max_depth);
}

}  // namespace spdc::num
