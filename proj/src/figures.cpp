#include <cmath>
#include <filesystem>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "spdc/cli.hpp"
#include "spdc/errors.hpp"
#include "spdc/groupdelay.hpp"
#include "spdc/hom.hpp"
#include "spdc/io.hpp"
#include "spdc/parallel.hpp"
#include "spdc/phasematch.hpp"
#include "spdc/units.hpp"

namespace spdc::cli {

namespace {

namespace fs = std::filesystem;

// Figure presets, parameter values from the source plots:
//   fig1/fig2: BBO, lambda_p = 0.4047 um, L = 0.5 cm
//   fig4: phi0 in {0.7, 0.5007589, 0.46, 0.39}
//   fig5: phi0 = 0.5007589, xi = 0.2
//   fig6: A+ at phi0 in {0.37734, 0.500578, 0.7}
//   fig9: two-slit, xi in {0.01, 0.025, 0.03, 0.035, 0.04}
//   fig10: four-slit, xi = 0.04 (a), 0.1 (b), 0.6 (c)
//   fig11: timescale curves, panel b zooms the A_minus zero
//   fig12: four-slit near the A_minus zero; panel a matches fig10(b)'s
//          oscillation count, panel b is the 20x-narrower companion of
//          fig10(a) (|A-| ratio 20), both calibrated against this
//          dispersion model
//   fig13: four-slit density, xi = 0.1, omega0*dt = 100 (a), 300 (b)
//   fig14: two-slit density, (xi, omega0*dt) = (0.1,100) (0.1,200) (0.2,200)
constexpr double kFig4Phi0[] = {0.7, 0.5007589, 0.46, 0.39};
constexpr double kFig5Phi0 = 0.5007589;
constexpr double kFig5Xi = 0.2;
constexpr double kFig6Phi0[] = {0.37734, 0.500578, 0.7};
constexpr double kFig9Xi[] = {0.01, 0.025, 0.03, 0.035, 0.04};
constexpr double kFig10Xi[] = {0.04, 0.1, 0.6};
constexpr double kFig12Xi[] = {0.81294, 0.813966};

struct FigureOutput {
  io::Csv csv;
  std::optional<io::SvgPlot> svg;
  nlohmann::json params;
};

using Generator = std::function<FigureOutput(const SetupConfig&)>;

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

FigureOutput fig1(const SetupConfig& cfg) {
  double xm = xi_max(cfg.crystal, cfg.lambda_p_um);
  auto xs = linspace(0.0, xm, 801);
  std::vector<double> ys(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    ys[i] = effective_index(cfg.crystal, cfg.lambda_p_um, xs[i]);
  });
  FigureOutput out{io::Csv({"xi", "n_eff"}),
                   io::SvgPlot("effective ordinary-wave index", "xi", "n_eff"),
                   {{"xi_max", xm}}};
  out.csv.comment("n_eff(xi), " + cfg.crystal.name);
  for (std::size_t i = 0; i < xs.size(); ++i) out.csv.row({xs[i], ys[i]});
  out.svg->add_series("n_eff", xs, ys);
  return out;
}

FigureOutput fig2(const SetupConfig& cfg) {
  double xm = xi_max(cfg.crystal, cfg.lambda_p_um);
  auto xs = linspace(0.0, xm, 801);
  std::vector<double> ys(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    ys[i] = collinear_angle(cfg.crystal, cfg.lambda_p_um, xs[i]);
  });
  FigureOutput out{io::Csv({"xi", "phi0_coll_rad"}),
                   io::SvgPlot("collinear locus", "xi", "phi0_coll (rad)"),
                   {{"xi_max", xm}}};
  out.csv.comment("phi0 at which SPDC is collinear, " + cfg.crystal.name);
  for (std::size_t i = 0; i < xs.size(); ++i) out.csv.row({xs[i], ys[i]});
  out.svg->add_series("phi0_coll", xs, ys);
  return out;
}

FigureOutput fig3(const SetupConfig& cfg) {
  SetupConfig c = cfg;
  c.phi0_rad = kFig5Phi0;
  auto g = cone_geometry(c.crystal, c, kFig5Xi);
  FigureOutput out{
      io::Csv({"xi", "theta0_rad", "theta_inner_rad", "theta_outer_rad"}),
      std::nullopt,
      {{"phi0_rad", c.phi0_rad}, {"xi", kFig5Xi}}};
  out.csv.comment("emission cones at phi0=0.5007589, xi=0.2");
  out.csv.row({kFig5Xi, g.theta0, g.theta_inner, g.theta_outer});
  return out;
}

FigureOutput fig4(const SetupConfig& cfg) {
  double xm = xi_max(cfg.crystal, cfg.lambda_p_um);
  auto xs = linspace(0.0, std::min(0.9, xm), 601);
  FigureOutput out{io::Csv({"xi", "phi0_rad", "theta_outer_rad",
                            "theta_inner_rad", "theta0_rad", "flag"}),
                   io::SvgPlot("cone opening angles", "xi", "theta (rad)"),
                   {{"phi0_values", std::vector<double>(std::begin(kFig4Phi0),
                                                        std::end(kFig4Phi0))}}};
  for (double phi0 : kFig4Phi0) {
    std::vector<double> to(xs.size(), std::nan("")), ti = to, t0 = to;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto t = theta0(cfg.crystal, cfg.lambda_p_um, phi0, xs[i]);
      if (t.regime == Regime::noncollinear) {
        t0[i] = t.theta0;
        ti[i] = t.theta0 / (1.0 + xs[i]);
        to[i] = t.theta0 / (1.0 - xs[i]);
      } else if (t.regime == Regime::collinear) {
        t0[i] = ti[i] = to[i] = 0.0;
      }
      if (std::isnan(t0[i]))
        out.csv.row_flagged({xs[i], phi0, std::nan(""), std::nan(""),
                             std::nan("")}, "forbidden");
      else
        out.csv.row_flagged({xs[i], phi0, to[i], ti[i], t0[i]}, "");
    }
    char label[48];
    std::snprintf(label, sizeof label, "phi0=%g", phi0);
    out.svg->add_series(std::string(label) + " outer", xs, to);
    out.svg->add_series(std::string(label) + " inner", xs, ti);
  }
  return out;
}

FigureOutput fig5(const SetupConfig& cfg) {
  SetupConfig c = cfg;
  c.phi0_rad = kFig5Phi0;
  auto g = cone_geometry(c.crystal, c, kFig5Xi);
  FigureOutput out{io::Csv({"slit", "theta_x_rad"}),
                   std::nullopt,
                   {{"phi0_rad", c.phi0_rad}, {"xi", kFig5Xi}}};
  out.csv.comment("slit positions selecting xi=0.2 at phi0=0.5007589");
  out.csv.comment("slits 1,2: higher-frequency (inner cone); 3,4: lower (outer)");
  out.csv.row({1, g.theta_inner});
  out.csv.row({2, -g.theta_inner});
  out.csv.row({3, g.theta_outer});
  out.csv.row({4, -g.theta_outer});
  return out;
}

FigureOutput fig6(const SetupConfig& cfg) {
  double xm = xi_max(cfg.crystal, cfg.lambda_p_um);
  auto xs = linspace(1e-4, std::min(0.9, xm), 601);
  FigureOutput out{io::Csv({"xi", "A_minus", "A_plus_phi1", "A_plus_phi2",
                            "A_plus_phi3"}),
                   io::SvgPlot("group-delay coefficients", "xi", "A"),
                   {{"phi0_values", std::vector<double>(std::begin(kFig6Phi0),
                                                        std::end(kFig6Phi0))}}};
  std::vector<std::vector<double>> ap(3, std::vector<double>(xs.size()));
  std::vector<double> am(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    for (int k = 0; k < 3; ++k) {
      auto co = GroupDelayCoefficients::compute(cfg.crystal, cfg.lambda_p_um,
                                                kFig6Phi0[k], xs[i]);
      ap[k][i] = co.a_plus;
      if (k == 0) am[i] = co.a_minus;
    }
  });
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.csv.row({xs[i], am[i], ap[0][i], ap[1][i], ap[2][i]});
  out.svg->add_series("A_minus", xs, am);
  for (int k = 0; k < 3; ++k) {
    char label[32];
    std::snprintf(label, sizeof label, "A_plus phi0=%g", kFig6Phi0[k]);
    out.svg->add_series(label, xs, ap[k]);
  }
  return out;
}

FigureOutput scheme_probability_figure(const SetupConfig& cfg, Scheme scheme,
                                       double xi, const char* title) {
  auto curve = split_probability_curve(cfg, xi, scheme);
  auto p = HomParams::make(cfg, xi);
  std::vector<double> wu(curve.x.size());
  for (std::size_t i = 0; i < curve.x.size(); ++i) wu[i] = 1.0 - curve.y[i];
  FigureOutput out{io::Csv({"omega0_dt", "w_split", "w_unsplit"}),
                   io::SvgPlot(title, "omega0*dt", "probability"),
                   {{"xi", xi}, {"scheme", to_string(scheme)}}};
  out.csv.comment("scheme=" + to_string(scheme));
  char meta[128];
  std::snprintf(meta, sizeof meta, "xi=%g, omega0*T_osc=%g, omega0*T_decoh=%g",
                xi, p.t_osc_w0, p.t_decoh_w0);
  out.csv.comment(meta);
  for (std::size_t i = 0; i < curve.x.size(); ++i)
    out.csv.row({curve.x[i], curve.y[i], wu[i]});
  out.svg->add_series("w_split", curve.x, curve.y);
  out.svg->add_series("w_unsplit", curve.x, wu);
  return out;
}

FigureOutput fig9(const SetupConfig& cfg) {
  // common grid wide enough for the largest T_decoh in the set
  double span = 0.0, step = 1e300;
  for (double xi : kFig9Xi) {
    auto p = HomParams::make(cfg, xi);
    span = std::max(span, 6.0 * p.t_decoh_w0);
    step = std::min(step, p.t_decoh_w0 / 48.0);
  }
  int n = static_cast<int>(std::ceil(span / step));
  FigureOutput out{io::Csv({"omega0_dt", "w_xi_0.01", "w_xi_0.025", "w_xi_0.03",
                            "w_xi_0.035", "w_xi_0.04"}),
                   io::SvgPlot("two-slit split probability", "omega0*dt",
                               "w_split"),
                   {{"xi_values", std::vector<double>(std::begin(kFig9Xi),
                                                      std::end(kFig9Xi))}}};
  out.csv.comment("scheme=two_slit; w_split vs delay");
  std::vector<double> xs(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) xs[i] = (i - n) * step;
  std::vector<std::vector<double>> ys;
  for (double xi : kFig9Xi) {
    auto p = HomParams::make(cfg, xi);
    std::vector<double> y(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      y[i] = split_probability_two_slit(p, xs[i]);
    ys.push_back(std::move(y));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.csv.row({xs[i], ys[0][i], ys[1][i], ys[2][i], ys[3][i], ys[4][i]});
  for (std::size_t k = 0; k < ys.size(); ++k) {
    char label[24];
    std::snprintf(label, sizeof label, "xi=%g", kFig9Xi[k]);
    out.svg->add_series(label, xs, ys[k]);
  }
  return out;
}

FigureOutput fig11(const SetupConfig& cfg, char panel) {
  double lo = panel == 'b' ? 0.806 : 0.01;
  double hi = panel == 'b' ? 0.822 : 0.30;
  auto xs = linspace(lo, hi, 601);
  std::vector<double> tosc(xs.size()), tdec(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    auto p = HomParams::make(cfg, xs[i]);
    tosc[i] = p.t_osc_w0;
    tdec[i] = p.t_decoh_w0;
  });
  FigureOutput out{io::Csv({"xi", "omega0_T_osc", "omega0_T_decoh"}),
                   io::SvgPlot("oscillation period and decoherence time", "xi",
                               "time (1/omega0)"),
                   {{"panel", std::string(1, panel)}}};
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.csv.row({xs[i], tosc[i], tdec[i]});
  out.svg->add_series("T_osc", xs, tosc);
  out.svg->add_series("T_decoh", xs, tdec);
  return out;
}

FigureOutput density_figure(const SetupConfig& cfg, Scheme scheme, double xi,
                            double dt_w0, const char* title) {
  auto curve = coincidence_density_curve(cfg, xi, scheme, dt_w0);
  if (cfg.detector_resolution > 0.0)
    apply_detector_resolution(curve, cfg.detector_resolution);
  FigureOutput out{
      io::Csv({"omega0_t1_minus_t2", "density"}),
      io::SvgPlot(title, "omega0*(t1-t2)", "coincidence density"),
      {{"xi", xi}, {"omega0_dt", dt_w0}, {"scheme", to_string(scheme)}}};
  out.csv.comment("scheme=" + to_string(scheme) + ", unit-integral normalization");
  char meta[128];
  std::snprintf(meta, sizeof meta,
                "xi=%g, omega0*dt=%g, omega0*T_osc=%g, omega0*T_decoh=%g", xi,
                dt_w0, curve.t_osc_w0, curve.t_decoh_w0);
  out.csv.comment(meta);
  for (std::size_t i = 0; i < curve.x.size(); ++i)
    out.csv.row({curve.x[i], curve.y[i]});
  out.svg->add_series("density", curve.x, curve.y);
  return out;
}

struct PanelSpec {
  std::string name;  // "a", "b", ... or "" for single-panel figures
  Generator gen;
};

std::map<std::string, std::vector<PanelSpec>> figure_table() {
  std::map<std::string, std::vector<PanelSpec>> t;
  t["fig1"] = {{"", fig1}};
  t["fig2"] = {{"", fig2}};
  t["fig3"] = {{"", fig3}};
  t["fig4"] = {{"", fig4}};
  t["fig5"] = {{"", fig5}};
  t["fig6"] = {{"", fig6}};
  t["fig7"] = {{"", [](const SetupConfig& c) {
                  return scheme_probability_figure(
                      c, Scheme::two_slit, 0.01, "two-slit scheme at the BS");
                }}};
  t["fig8"] = {{"", [](const SetupConfig& c) {
                  return scheme_probability_figure(
                      c, Scheme::four_slit, 0.1, "split and unsplit pairs");
                }}};
  t["fig9"] = {{"", fig9}};
  t["fig10"] = {};
  for (int k = 0; k < 3; ++k) {
    std::string p(1, static_cast<char>('a' + k));
    double xi = kFig10Xi[k];
    t["fig10"].push_back({p, [xi](const SetupConfig& c) {
                            return scheme_probability_figure(
                                c, Scheme::four_slit, xi,
                                "four-slit split probability");
                          }});
  }
  t["fig11"] = {{"a", [](const SetupConfig& c) { return fig11(c, 'a'); }},
                {"b", [](const SetupConfig& c) { return fig11(c, 'b'); }}};
  t["fig12"] = {};
  for (int k = 0; k < 2; ++k) {
    std::string p(1, static_cast<char>('a' + k));
    double xi = kFig12Xi[k];
    t["fig12"].push_back({p, [xi](const SetupConfig& c) {
                            return scheme_probability_figure(
                                c, Scheme::four_slit, xi,
                                "four-slit split probability near the "
                                "A_minus zero");
                          }});
  }
  t["fig13"] = {{"a",
                 [](const SetupConfig& c) {
                   return density_figure(c, Scheme::four_slit, 0.1, 100.0,
                                         "four-slit coincidence density");
                 }},
                {"b", [](const SetupConfig& c) {
                   return density_figure(c, Scheme::four_slit, 0.1, 300.0,
                                         "four-slit coincidence density");
                 }}};
  t["fig14"] = {{"a",
                 [](const SetupConfig& c) {
                   return density_figure(c, Scheme::two_slit, 0.1, 100.0,
                                         "two-slit coincidence density");
                 }},
                {"b",
                 [](const SetupConfig& c) {
                   return density_figure(c, Scheme::two_slit, 0.1, 200.0,
                                         "two-slit coincidence density");
                 }},
                {"c", [](const SetupConfig& c) {
                   return density_figure(c, Scheme::two_slit, 0.2, 200.0,
                                         "two-slit coincidence density");
                 }}};
  return t;
}

}  // namespace

int cmd_figure(const std::string& id, const std::string& panel,
               const CommonOptions& opt) {
  SetupConfig cfg;
  try {
    cfg = resolve_config(opt);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  }

  static const auto table = figure_table();
  auto it = table.find(id);
  if (it == table.end()) {
    std::fprintf(stderr, "error: unknown figure id '%s' (fig1..fig14)\n",
                 id.c_str());
    return kValidationError;
  }
  std::vector<PanelSpec> todo;
  for (const auto& p : it->second)
    if (panel.empty() || p.name == panel) todo.push_back(p);
  if (todo.empty()) {
    std::fprintf(stderr, "error: figure %s has no panel '%s'\n", id.c_str(),
                 panel.c_str());
    return kValidationError;
  }

  bool want_csv = opt.format.empty() || opt.format == "csv";
  bool want_svg = opt.format.empty() || opt.format == "svg";
  if (!want_csv && !want_svg && opt.format != "json") {
    std::fprintf(stderr, "error: figure format must be csv or svg\n");
    return kValidationError;
  }

  try {
    fs::create_directories(opt.out_dir);
    for (const auto& p : todo) {
      FigureOutput out = p.gen(cfg);
      std::string stem = id + (p.name.empty() ? "" : "_" + p.name);
      std::string base = (fs::path(opt.out_dir) / stem).string();
      std::vector<std::string> written;
      if (want_csv) {
        out.csv.write(base + ".csv");
        written.push_back(base + ".csv");
      }
      if (want_svg && out.svg) {
        out.svg->write(base + ".svg");
        written.push_back(base + ".svg");
      }
      nlohmann::json params = out.params;
      params["figure"] = stem;
      io::write_manifest(base + ".manifest.json", "figure " + stem, cfg,
                         params, written);
    }
  } catch (const UnsupportedRegimeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidationError;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kIoError;
  }
  return kOk;
}

}  // namespace spdc::cli
