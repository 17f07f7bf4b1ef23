#include "spdc/dispersion.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "spdc/units.hpp"

namespace spdc {

namespace {

std::string describe(double lambda_um, const CrystalDispersion& c) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "lambda = %.6g um outside transparency window [%g, %g] um of %s",
                lambda_um, c.window_lo_um, c.window_hi_um, c.name.c_str());
  return buf;
}

double checked_index(const CrystalDispersion& crystal, const SellmeierSet& s,
                     double lambda_um) {
  if (!crystal.in_window(lambda_um))
    throw TransparencyError(describe(lambda_um, crystal));
  double n2 = s.n2(lambda_um);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw TransparencyError(describe(lambda_um, crystal));
  return std::sqrt(n2);
}

// dn/dlambda from the Sellmeier derivative, assuming n2 > 0.
double dn_dlambda(const SellmeierSet& s, double lambda_um) {
  return s.dn2_dlambda(lambda_um) / (2.0 * std::sqrt(s.n2(lambda_um)));
}

// Margin for the derivative neighborhood (relative, matches the 1e-4*omega
// finite-difference stencil with headroom).
constexpr double kDerivMargin = 2e-4;

void require_derivative_window(const CrystalDispersion& crystal,
                               double lambda_um) {
  double lo = lambda_um * (1.0 - kDerivMargin);
  double hi = lambda_um * (1.0 + kDerivMargin);
  if (!crystal.in_window(lo) || !crystal.in_window(hi)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "lambda = %.6g um too close to the window edge of %s for a "
                  "derivative neighborhood",
                  lambda_um, crystal.name.c_str());
    throw DerivativeDomainError(buf);
  }
}

}  // namespace

const CrystalDispersion& CrystalDispersion::bbo() {
  static const CrystalDispersion kBbo{
      "BBO",
      {2.7405, 0.0184, 0.0179, 0.0155},
      {2.3730, 0.0128, 0.0156, 0.0044},
      0.19,
      13.29};
  return kBbo;
}

CrystalDispersion CrystalDispersion::constant_index(const std::string& name,
                                                    double n_o, double n_e) {
  CrystalDispersion c;
  c.name = name;
  c.ordinary = {n_o * n_o, 0.0, 0.0, 0.0};
  c.extraordinary = {n_e * n_e, 0.0, 0.0, 0.0};
  c.window_lo_um = 1e-3;
  c.window_hi_um = 1e3;
  return c;
}

CrystalDispersion CrystalDispersion::from_json(const nlohmann::json& j) {
  CrystalDispersion c;
  try {
    c.name = j.at("name").get<std::string>();
    auto so = j.at("sellmeier_o");
    auto se = j.at("sellmeier_e");
    auto win = j.at("window_um");
    if (so.size() != 4 || se.size() != 4 || win.size() != 2)
      throw ConfigError("crystal: sellmeier sets need 4 coefficients, window 2");
    c.ordinary = {so[0].get<double>(), so[1].get<double>(), so[2].get<double>(),
                  so[3].get<double>()};
    c.extraordinary = {se[0].get<double>(), se[1].get<double>(),
                       se[2].get<double>(), se[3].get<double>()};
    c.window_lo_um = win[0].get<double>();
    c.window_hi_um = win[1].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("crystal: ") + e.what());
  }
  if (!(c.window_lo_um > 0.0) || !(c.window_hi_um > c.window_lo_um))
    throw ConfigError("crystal: window_um must satisfy 0 < lo < hi");
  return c;
}

void CrystalDispersion::to_json(nlohmann::json& j) const {
  j = nlohmann::json{
      {"name", name},
      {"sellmeier_o", {ordinary.a, ordinary.b, ordinary.c, ordinary.d}},
      {"sellmeier_e",
       {extraordinary.a, extraordinary.b, extraordinary.c, extraordinary.d}},
      {"window_um", {window_lo_um, window_hi_um}}};
}

CrystalDispersion CrystalDispersion::named(const std::string& name) {
  if (name == "BBO" || name == "bbo") return bbo();
  throw ConfigError("unknown crystal preset: " + name);
}

double index_ordinary(const CrystalDispersion& crystal, double lambda_um) {
  return checked_index(crystal, crystal.ordinary, lambda_um);
}

double index_extraordinary(const CrystalDispersion& crystal, double lambda_um) {
  return checked_index(crystal, crystal.extraordinary, lambda_um);
}

double index_extraordinary_at_angle(const CrystalDispersion& crystal,
                                    double lambda_um, double phi_rad) {
  if (phi_rad < 0.0 || phi_rad > kPi / 2.0)
    throw std::invalid_argument("index_extraordinary_at_angle: phi outside [0, pi/2]");
  double no = checked_index(crystal, crystal.ordinary, lambda_um);
  double ne = checked_index(crystal, crystal.extraordinary, lambda_um);
  double cphi = std::cos(phi_rad), sphi = std::sin(phi_rad);
  return 1.0 / std::sqrt(cphi * cphi / (no * no) + sphi * sphi / (ne * ne));
}

double group_index_ordinary(const CrystalDispersion& crystal,
                            double omega_rad_fs) {
  double lambda = wavelength_from_omega(omega_rad_fs);
  require_derivative_window(crystal, lambda);
  double n = checked_index(crystal, crystal.ordinary, lambda);
  // c dk/domega = n - lambda dn/dlambda
  return n - lambda * dn_dlambda(crystal.ordinary, lambda);
}

double group_index_extraordinary_at_angle(const CrystalDispersion& crystal,
                                          double omega_rad_fs, double phi_rad) {
  double lambda = wavelength_from_omega(omega_rad_fs);
  require_derivative_window(crystal, lambda);
  double nphi = index_extraordinary_at_angle(crystal, lambda, phi_rad);
  double no = checked_index(crystal, crystal.ordinary, lambda);
  double ne = checked_index(crystal, crystal.extraordinary, lambda);
  double cphi = std::cos(phi_rad), sphi = std::sin(phi_rad);
  // d n(phi)/dlambda through the index-ellipsoid combination
  double dn = nphi * nphi * nphi *
              (cphi * cphi / (no * no * no) * dn_dlambda(crystal.ordinary, lambda) +
               sphi * sphi / (ne * ne * ne) * dn_dlambda(crystal.extraordinary, lambda));
  return nphi - lambda * dn;
}

}  // namespace spdc
