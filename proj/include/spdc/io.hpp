#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spdc/config.hpp"

#include <nlohmann/json_fwd.hpp>

namespace spdc::io {

/// Fixed float formatting: 12 significant digits, locale-independent.
/// Identical inputs give byte-identical text.
std::string format_value(double v);

/// CSV document: '#'-prefixed metadata comments, a header row, data rows.
/// NaN renders as an empty cell.
class Csv {
 public:
  explicit Csv(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void comment(const std::string& line) { comments_.push_back(line); }
  void row(const std::vector<double>& values);
  void row_flagged(const std::vector<double>& values, const std::string& flag);

  std::string str() const;
  void write(const std::string& path) const;  // throws std::runtime_error on IO

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::string> rows_;
};

/// Minimal SVG line plot: axes, ticks, labeled series.  No dependencies.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label)
      : title_(std::move(title)), x_label_(std::move(x_label)),
        y_label_(std::move(y_label)) {}

  void add_series(const std::string& name, const std::vector<double>& x,
                  const std::vector<double>& y);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  struct Series {
    std::string name;
    std::vector<double> x, y;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
};

std::uint64_t fnv1a64(std::string_view data);

/// Hash of the resolved configuration plus command parameters (hex digest of
/// the canonical sorted-key JSON dump).
std::string config_hash(const SetupConfig& config,
                        const nlohmann::json& extra_params);

/// Manifest sidecar describing a command invocation; identical manifests
/// imply byte-identical outputs.
void write_manifest(const std::string& path, const std::string& command,
                    const SetupConfig& config,
                    const nlohmann::json& extra_params,
                    const std::vector<std::string>& outputs);

}  // namespace spdc::io
