#include "spdc/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "spdc/errors.hpp"

namespace spdc {

std::string to_string(Scheme s) {
  return s == Scheme::two_slit ? "two_slit" : "four_slit";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "two_slit" || s == "two" || s == "2") return Scheme::two_slit;
  if (s == "four_slit" || s == "four" || s == "4") return Scheme::four_slit;
  throw ConfigError("scheme must be two_slit or four_slit, got '" + s + "'");
}

void SetupConfig::validate() const {
  if (!(lambda_p_um > 0.0)) throw ConfigError("lambda_p_um must be positive");
  if (!crystal.in_window(lambda_p_um))
    throw ConfigError("pump wavelength outside crystal transparency window");
  if (!(L_cm > 0.0)) throw ConfigError("L_cm must be positive");
  if (!(tau_ps > 0.0)) throw ConfigError("tau_ps must be positive");
  if (!(waist_um > 0.0)) throw ConfigError("waist_um must be positive");
  if (!(phi0_rad >= 0.0) || phi0_rad > kPi / 2.0)
    throw ConfigError("phi0_rad must lie in [0, pi/2]");
  if (!(slit_width_frac > 0.0) || slit_width_frac >= 1.0)
    throw ConfigError("slit_width_frac must lie in (0, 1): the slit-column "
                      "reduction requires slit width < (dtheta)_L");
  if (detector_resolution < 0.0)
    throw ConfigError("detector_resolution must be >= 0");
}

SetupConfig SetupConfig::from_json(const nlohmann::json& j) {
  SetupConfig cfg;
  try {
    if (j.contains("crystal")) {
      const auto& c = j.at("crystal");
      cfg.crystal = c.is_string()
                        ? CrystalDispersion::named(c.get<std::string>())
                        : CrystalDispersion::from_json(c);
    }
    if (j.contains("lambda_p_um")) cfg.lambda_p_um = j.at("lambda_p_um").get<double>();
    if (j.contains("L_cm")) cfg.L_cm = j.at("L_cm").get<double>();
    if (j.contains("phi0_rad")) cfg.phi0_rad = j.at("phi0_rad").get<double>();
    if (j.contains("tau_ps")) cfg.tau_ps = j.at("tau_ps").get<double>();
    if (j.contains("waist_um")) cfg.waist_um = j.at("waist_um").get<double>();
    if (j.contains("scheme"))
      cfg.scheme = scheme_from_string(j.at("scheme").get<std::string>());
    if (j.contains("slit_width_frac"))
      cfg.slit_width_frac = j.at("slit_width_frac").get<double>();
    if (j.contains("detector_resolution"))
      cfg.detector_resolution = j.at("detector_resolution").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

SetupConfig SetupConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return from_json(j);
}

void SetupConfig::to_json(nlohmann::json& j) const {
  nlohmann::json cj;
  crystal.to_json(cj);
  j = nlohmann::json{{"crystal", cj},
                     {"lambda_p_um", lambda_p_um},
                     {"L_cm", L_cm},
                     {"phi0_rad", phi0_rad},
                     {"tau_ps", tau_ps},
                     {"waist_um", waist_um},
                     {"scheme", to_string(scheme)},
                     {"slit_width_frac", slit_width_frac},
                     {"detector_resolution", detector_resolution}};
}

}  // namespace spdc
