#include "spdc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "spdc/version.hpp"

namespace spdc::io {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Csv::row(const std::vector<double>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    if (!std::isnan(values[i])) line += format_value(values[i]);
  }
  rows_.push_back(std::move(line));
}

void Csv::row_flagged(const std::vector<double>& values,
                      const std::string& flag) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    if (!std::isnan(values[i])) line += format_value(values[i]);
  }
  line += ',';
  line += flag;
  rows_.push_back(std::move(line));
}

std::string Csv::str() const {
  std::string out;
  for (const auto& c : comments_) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& r : rows_) {
    out += r;
    out += '\n';
  }
  return out;
}

void Csv::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << str();
  if (!f) throw std::runtime_error("write failed: " + path);
}

namespace {

constexpr int kW = 720, kH = 480, kMargin = 64;
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void SvgPlot::add_series(const std::string& name, const std::vector<double>& x,
                         const std::vector<double>& y) {
  series_.push_back({name, x, y});
}

std::string SvgPlot::str() const {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series_) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) continue;
      if (first) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        first = false;
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) {
    return kMargin + (x - xmin) / (xmax - xmin) * (kW - 2 * kMargin);
  };
  auto py = [&](double y) {
    return kH - kMargin - (y - ymin) / (ymax - ymin) * (kH - 2 * kMargin);
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
    << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH
    << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\" font-size=\"15\">" << title_ << "</text>\n";

  // axes
  o << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\""
    << kW - kMargin << "\" y2=\"" << kH - kMargin
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
    << kMargin << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double xv = xmin + (xmax - xmin) * i / 5.0;
    double yv = ymin + (ymax - ymin) * i / 5.0;
    o << "<line x1=\"" << svg_num(px(xv)) << "\" y1=\"" << kH - kMargin
      << "\" x2=\"" << svg_num(px(xv)) << "\" y2=\"" << kH - kMargin + 5
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << svg_num(px(xv)) << "\" y=\"" << kH - kMargin + 20
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"11\">" << tick_label(xv) << "</text>\n";
    o << "<line x1=\"" << kMargin - 5 << "\" y1=\"" << svg_num(py(yv))
      << "\" x2=\"" << kMargin << "\" y2=\"" << svg_num(py(yv))
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << kMargin - 8 << "\" y=\"" << svg_num(py(yv) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick_label(yv) << "</text>\n";
  }
  o << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 16
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"13\">" << x_label_ << "</text>\n";
  o << "<text x=\"18\" y=\"" << kH / 2
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
       "transform=\"rotate(-90 18 " << kH / 2 << ")\">" << y_label_
    << "</text>\n";

  for (std::size_t si = 0; si < series_.size(); ++si) {
    const auto& s = series_[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    o << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.4\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) continue;
      o << svg_num(px(s.x[i])) << ',' << svg_num(py(s.y[i])) << ' ';
    }
    o << "\"/>\n";
    if (series_.size() > 1) {
      o << "<text x=\"" << kW - kMargin + 4 << "\" y=\""
        << kMargin + 16 * (si + 1)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
        << "\">" << s.name << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

void SvgPlot::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << str();
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string config_hash(const SetupConfig& config,
                        const nlohmann::json& extra_params) {
  nlohmann::json j;
  config.to_json(j);
  j["params"] = extra_params;
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

void write_manifest(const std::string& path, const std::string& command,
                    const SetupConfig& config,
                    const nlohmann::json& extra_params,
                    const std::vector<std::string>& outputs) {
  nlohmann::json cj;
  config.to_json(cj);
  nlohmann::json j{{"command", command},
                   {"config", cj},
                   {"params", extra_params},
                   {"outputs", outputs},
                   {"tool_version", kVersion},
                   {"config_hash", config_hash(config, extra_params)}};
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace spdc::io
