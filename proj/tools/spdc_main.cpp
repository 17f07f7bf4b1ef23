#include <CLI11.hpp>

#include "spdc/cli.hpp"
#include "spdc/version.hpp"

namespace {

void add_common(CLI::App* sub, spdc::cli::CommonOptions& opt) {
  sub->add_option("--config", opt.config_path, "JSON config file");
  sub->add_option("--out", opt.out_dir, "output directory");
  sub->add_option("--format", opt.format, "csv|svg|json")
      ->check(CLI::IsMember({"csv", "svg", "json"}));
  sub->add_option("--phi0", opt.phi0, "optical-axis angle (rad)");
  sub->add_option("--scheme", opt.scheme, "two|four")
      ->check(CLI::IsMember({"two", "four", "two_slit", "four_slit"}));
  sub->add_option("--seed", opt.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"type-I noncollinear frequency-nondegenerate SPDC simulator"};
  app.set_version_flag("--version", spdc::kVersion);
  app.require_subcommand(1);

  spdc::cli::CommonOptions opt;

  std::string fig_id, fig_panel;
  auto* fig = app.add_subcommand("figure", "reproduce a built-in figure");
  fig->add_option("id", fig_id, "fig1..fig14")->required();
  fig->add_option("--panel", fig_panel, "panel letter (a, b, c)");
  add_common(fig, opt);

  std::string quantity, axis;
  double from = 0.0, to = 1.0;
  int points = 200;
  auto* sweep = app.add_subcommand("sweep", "uniform-grid parameter sweep");
  sweep->add_option("quantity", quantity,
                    "n_eff|N_eff|theta0|theta_pm|phi0_coll|A_plus|A_minus|"
                    "T_osc|T_decoh|w_split_2|w_split_4")
      ->required();
  sweep->add_option("--axis", axis, "xi|phi0|dt")->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--points", points, "grid size");
  sweep->add_option("--xi", opt.xi, "fixed xi for non-xi axes");
  sweep->add_option("--dt", opt.dt_w0, "fixed omega0*dt for non-dt axes");
  add_common(sweep, opt);

  auto* coeffs = app.add_subcommand("coeffs",
                                    "group-delay coefficients and timescales");
  coeffs->add_option("--xi", opt.xi, "nondegeneracy parameter");
  add_common(coeffs, opt);

  int wf_points = 64;
  auto* wf = app.add_subcommand("wf", "temporal wavefunction grid dump (CSV)");
  wf->add_option("--xi", opt.xi, "nondegeneracy parameter");
  wf->add_option("--dt", opt.dt_w0, "delay, omega0*dt units");
  wf->add_option("--points", wf_points, "lattice points per axis");
  add_common(wf, opt);

  bool quick = false;
  auto* verify = app.add_subcommand("verify",
                                    "oracle suite + anchor checks (exit 2 on "
                                    "failure)");
  verify->add_flag("--quick", quick, "skip Monte Carlo, thin the grids");
  add_common(verify, opt);

  double fig_xi = -1.0, fig_dt = 0.0;
  fig->add_option("--xi", fig_xi, "override preset xi (unused by presets)");
  fig->add_option("--dt", fig_dt, "override preset dt (unused by presets)");

  CLI11_PARSE(app, argc, argv);

  if (fig->parsed()) return spdc::cli::cmd_figure(fig_id, fig_panel, opt);
  if (sweep->parsed())
    return spdc::cli::cmd_sweep(quantity, axis, from, to, points, opt);
  if (coeffs->parsed()) return spdc::cli::cmd_coeffs(opt);
  if (wf->parsed()) return spdc::cli::cmd_wf(wf_points, opt);
  if (verify->parsed()) return spdc::cli::cmd_verify(quick, opt);
  return spdc::cli::kValidationError;
}
