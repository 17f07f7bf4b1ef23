#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spdc/config.hpp"

namespace spdc::cli {

// exit codes: 0 success, 1 validation, 2 verification failure, 3 I/O
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kVerificationError = 2;
inline constexpr int kIoError = 3;

struct CommonOptions {
  std::string config_path;  // --config (empty = built-in defaults)
  std::string out_dir = ".";
  std::string format;       // "", "csv", "svg", "json"
  std::optional<double> xi;
  std::optional<double> phi0;
  std::optional<double> dt_w0;
  std::optional<std::string> scheme;
  std::uint64_t seed = 20240907;
};

/// Precedence: built-in defaults < config file < command-line flags.
SetupConfig resolve_config(const CommonOptions& opt);

int cmd_figure(const std::string& id, const std::string& panel,
               const CommonOptions& opt);

int cmd_sweep(const std::string& quantity, const std::string& axis,
              double from, double to, int points, const CommonOptions& opt);

int cmd_coeffs(const CommonOptions& opt);

int cmd_wf(int points_per_axis, const CommonOptions& opt);

int cmd_verify(bool quick, const CommonOptions& opt);

}  // namespace spdc::cli
