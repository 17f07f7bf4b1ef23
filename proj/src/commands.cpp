#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "spdc/cli.hpp"
#include "spdc/errors.hpp"
#include "spdc/groupdelay.hpp"
#include "spdc/hom.hpp"
#include "spdc/io.hpp"
#include "spdc/oracle.hpp"
#include "spdc/parallel.hpp"
#include "spdc/phasematch.hpp"
#include "spdc/units.hpp"

namespace spdc::cli {

namespace fs = std::filesystem;

SetupConfig resolve_config(const CommonOptions& opt) {
  SetupConfig cfg = opt.config_path.empty()
                        ? SetupConfig{}
                        : SetupConfig::from_file(opt.config_path);
  if (opt.phi0) cfg.phi0_rad = *opt.phi0;
  if (opt.scheme) cfg.scheme = scheme_from_string(*opt.scheme);
  cfg.validate();
  return cfg;
}

namespace {

struct SweepPoint {
  double value = std::nan("");
  double extra1 = std::nan("");  // theta_pm: inner / outer
  double extra2 = std::nan("");
  std::string flag;
};

}  // namespace

int cmd_sweep(const std::string& quantity, const std::string& axis,
              double from, double to, int points, const CommonOptions& opt) {
  SetupConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }
  const std::vector<std::string> known = {
      "n_eff", "N_eff",   "theta0", "theta_pm", "phi0_coll", "A_plus",
      "A_minus", "T_osc", "T_decoh", "w_split_2", "w_split_4"};
  if (std::find(known.begin(), known.end(), quantity) == known.end()) {
    std::fprintf(stderr, "error: unknown sweep quantity '%s'\n",
                 quantity.c_str());
    return kValidationError;
  }
  if (axis != "xi" && axis != "phi0" && axis != "dt") {
    std::fprintf(stderr, "error: sweep axis must be xi, phi0 or dt\n");
    return kValidationError;
  }
  if (points < 2 || !(to > from)) {
    std::fprintf(stderr, "error: need points >= 2 and to > from\n");
    return kValidationError;
  }

  const double xi_fixed = opt.xi.value_or(0.2);
  const double dt_fixed = opt.dt_w0.value_or(0.0);

  std::vector<SweepPoint> rows(points);
  parallel_for(points, [&](std::size_t i) {
    double v = from + (to - from) * static_cast<double>(i) / (points - 1);
    double xi = axis == "xi" ? v : xi_fixed;
    double phi0 = axis == "phi0" ? v : cfg.phi0_rad;
    double dt = axis == "dt" ? v : dt_fixed;
    SweepPoint& r = rows[i];
    try {
      if (quantity == "n_eff") {
        r.value = effective_index(cfg.crystal, cfg.lambda_p_um, xi);
      } else if (quantity == "N_eff") {
        r.value = effective_index_N(cfg.crystal, cfg.lambda_p_um, xi);
      } else if (quantity == "theta0" || quantity == "theta_pm") {
        auto t = theta0(cfg.crystal, cfg.lambda_p_um, phi0, xi);
        if (t.regime == Regime::forbidden) {
          r.flag = "forbidden";
        } else {
          r.value = t.theta0;
          if (quantity == "theta_pm") {
            r.extra1 = t.theta0 / (1.0 + xi);
            r.extra2 = t.theta0 / (1.0 - xi);
          }
        }
      } else if (quantity == "phi0_coll") {
        r.value = collinear_angle(cfg.crystal, cfg.lambda_p_um, xi);
      } else if (quantity == "A_plus" || quantity == "A_minus") {
        auto c = GroupDelayCoefficients::compute(cfg.crystal, cfg.lambda_p_um,
                                                 phi0, xi);
        r.value = quantity == "A_plus" ? c.a_plus : c.a_minus;
      } else if (quantity == "T_osc" || quantity == "T_decoh") {
        auto p = HomParams::make(cfg, xi);
        r.value = quantity == "T_osc" ? p.t_osc_w0 : p.t_decoh_w0;
        if (quantity == "T_osc" && xi <= 0.0) r.flag = "infinite";
      } else if (quantity == "w_split_2" || quantity == "w_split_4") {
        auto p = HomParams::make(cfg, xi);
        Scheme s =
            quantity == "w_split_2" ? Scheme::two_slit : Scheme::four_slit;
        r.value = split_probability(p, s, dt);
        if (p.model_fragile) r.flag = "model_fragile";
      }
    } catch (const TransparencyError&) {
      r.flag = "out_of_window";
    } catch (const DerivativeDomainError&) {
      r.flag = "out_of_window";
    } catch (const NoCollinearSolutionError&) {
      r.flag = "no_solution";
    } catch (const std::invalid_argument&) {
      r.flag = "invalid";
    }
  });

  std::vector<std::string> cols = {axis, quantity};
  if (quantity == "theta_pm") {
    cols = {axis, "theta0", "theta_inner", "theta_outer"};
  }
  cols.push_back("flag");
  io::Csv csv(std::vector<std::string>(cols));
  csv.comment("sweep " + quantity + " over " + axis);
  {
    char meta[160];
    std::snprintf(meta, sizeof meta, "fixed: xi=%g phi0=%g omega0*dt=%g",
                  xi_fixed, cfg.phi0_rad, dt_fixed);
    csv.comment(meta);
  }
  for (int i = 0; i < points; ++i) {
    double v = from + (to - from) * static_cast<double>(i) / (points - 1);
    if (quantity == "theta_pm")
      csv.row_flagged({v, rows[i].value, rows[i].extra1, rows[i].extra2},
                      rows[i].flag);
    else
      csv.row_flagged({v, rows[i].value}, rows[i].flag);
  }

  try {
    fs::create_directories(opt.out_dir);
    std::string base =
        (fs::path(opt.out_dir) / ("sweep_" + quantity + "_" + axis)).string();
    csv.write(base + ".csv");
    nlohmann::json params{{"quantity", quantity}, {"axis", axis},
                          {"from", from},         {"to", to},
                          {"points", points},     {"xi", xi_fixed},
                          {"dt_w0", dt_fixed}};
    io::write_manifest(base + ".manifest.json", "sweep " + quantity, cfg,
                       params, {base + ".csv"});
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }
  return kOk;
}

int cmd_coeffs(const CommonOptions& opt) {
  SetupConfig cfg;
  double xi;
  try {
    cfg = resolve_config(opt);
    xi = opt.xi.value_or(0.2);
    if (xi < 0.0 || xi >= 1.0)
      throw ConfigError("--xi must lie in [0, 1)");
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }
  nlohmann::json j;
  try {
    auto c = GroupDelayCoefficients::compute(cfg.crystal, cfg.lambda_p_um,
                                             cfg.phi0_rad, xi);
    auto t = timescales(c, cfg, xi);
    j = nlohmann::json{
        {"xi", xi},
        {"phi0_rad", cfg.phi0_rad},
        {"A_p", c.a_pump},
        {"A_h", c.a_high},
        {"A_l", c.a_low},
        {"A_plus", c.a_plus},
        {"A_minus", c.a_minus},
        {"model_fragile", c.model_fragile},
        {"tau_gr_fs", t.tau_gr_fs},
        {"T_decoh_fs", t.t_decoh_fs},
        {"omega0_T_decoh", t.t_decoh_fs * cfg.omega0()},
        {"pulse_regime", pulse_regime(cfg, c) == PulseRegime::long_pulse
                             ? "long_pulse"
                             : "short_pulse"},
        {"omega0_rad_fs", cfg.omega0()}};
    if (std::isinf(t.t_osc_fs)) {
      j["T_osc_fs"] = nullptr;
      j["omega0_T_osc"] = nullptr;
    } else {
      j["T_osc_fs"] = t.t_osc_fs;
      j["omega0_T_osc"] = t.t_osc_fs * cfg.omega0();
      j["osc_count"] = t.osc_count;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }
  std::printf("%s\n", j.dump(2).c_str());
  return kOk;
}

int cmd_wf(int points_per_axis, const CommonOptions& opt) {
  SetupConfig cfg;
  double xi, dt_w0;
  Scheme scheme;
  try {
    cfg = resolve_config(opt);
    xi = opt.xi.value_or(0.2);
    dt_w0 = opt.dt_w0.value_or(0.0);
    scheme = opt.scheme ? scheme_from_string(*opt.scheme) : cfg.scheme;
    if (points_per_axis < 4 || points_per_axis > 512)
      throw ConfigError("--points must lie in [4, 512]");
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }

  try {
    double w0 = cfg.omega0();
    TemporalWF wf = TemporalWF::make(cfg, xi, dt_w0 / w0, scheme);
    double n = wf.norm();
    // lattice in rotated coordinates so both the pump and kernel scales
    // are resolved; rows are (t1, t2) samples
    double uc = -wf.dt_fs(), uh = 4.0 * std::sqrt(2.0) * wf.tau_fs();
    double vh = std::fabs(wf.dt_fs()) + 5.0 * wf.kernel_width_fs();
    io::Csv csv({"omega0_t1", "omega0_t2", "re", "im", "abs2"});
    csv.comment("temporal wavefunction N*F, scheme=" + to_string(scheme));
    char meta[96];
    std::snprintf(meta, sizeof meta, "xi=%g omega0*dt=%g", xi, dt_w0);
    csv.comment(meta);
    for (int i = 0; i < points_per_axis; ++i) {
      double u = uc - uh + 2.0 * uh * i / (points_per_axis - 1);
      for (int j = 0; j < points_per_axis; ++j) {
        double v = -vh + 2.0 * vh * j / (points_per_axis - 1);
        double t1 = 0.5 * (u + v), t2 = 0.5 * (u - v);
        Complex f = n * wf.value(t1, t2);
        csv.row({w0 * t1, w0 * t2, f.real(), f.imag(), std::norm(f)});
      }
    }
    fs::create_directories(opt.out_dir);
    std::string base = (fs::path(opt.out_dir) / "wavefunction").string();
    csv.write(base + ".csv");
    nlohmann::json params{{"xi", xi},
                          {"dt_w0", dt_w0},
                          {"scheme", to_string(scheme)},
                          {"points", points_per_axis}};
    io::write_manifest(base + ".manifest.json", "wf", cfg, params,
                       {base + ".csv"});
  } catch (const UnsupportedRegimeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  } catch (const DegenerateWidthError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }
  return kOk;
}

int cmd_verify(bool quick, const CommonOptions& opt) {
  SetupConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<oracle::OracleCheck> checks;
  try {
    checks = oracle::run_suite(cfg, quick, opt.seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verification aborted: %s\n", e.what());
    return kVerificationError;
  }
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

  int failed = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    oracle::to_json(cj, c);
    arr.push_back(cj);
    if (!c.pass) ++failed;
  }
  nlohmann::json report{{"checks", arr},
                        {"total", checks.size()},
                        {"failed", failed},
                        {"quick", quick},
                        {"seed", opt.seed},
                        {"elapsed_s", elapsed}};
  std::printf("%s\n", report.dump(2).c_str());

  if (!opt.out_dir.empty() && opt.out_dir != "-") {
    try {
      fs::create_directories(opt.out_dir);
      std::string path = (fs::path(opt.out_dir) / "verify.json").string();
      std::ofstream f(path, std::ios::binary);
      if (f) f << report.dump(2) << '\n';
    } catch (...) {
      // stdout already has the report; file output is best-effort here
    }
  }
  return failed == 0 ? kOk : kVerificationError;
}

}  // namespace spdc::cli
