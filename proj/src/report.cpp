#include "burgers/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace burgers::report {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

nlohmann::json json_number(double value) {
  if (std::isfinite(value)) return value;
  return format_number(value);
}

}  // namespace

void write_sweep_n(std::span<const analysis::ErrorRecord> records, std::ostream& out, Format format) {
  if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) rows.push_back({{"N", r.N}, {"nu", r.nu}, {"sup_error", json_number(r.sup_error)}});
    out << rows.dump(2) << "\n";
    return;
  }
  out << "N,nu,sup_error\n";
  for (const auto& r : records) {
    out << r.N << ',' << format_number(r.nu) << ',' << format_number(r.sup_error) << '\n';
  }
}

void write_sweep_nu(std::span<const analysis::ErrorRecord> records, std::ostream& out, Format format) {
  if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) {
      rows.push_back({{"nu", r.nu}, {"N", r.N}, {"sup_error", json_number(r.sup_error)}, {"flag", r.flagged ? 1 : 0}});
    }
    out << rows.dump(2) << "\n";
    return;
  }
  out << "nu,N,sup_error,flag\n";
  for (const auto& r : records) {
    out << format_number(r.nu) << ',' << r.N << ',' << format_number(r.sup_error) << ','
        << (r.flagged ? 1 : 0) << '\n';
  }
}

void write_ratio(std::span<const analysis::RatioEstimate> ratios, std::ostream& out, Format format) {
  if (format == Format::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : ratios) rows.push_back({{"m", r.m}, {"r_m", r.r}});
    out << rows.dump(2) << "\n";
    return;
  }
  out << "m,r_m\n";
  for (const auto& r : ratios) out << r.m << ',' << format_number(r.r) << '\n';
}

void write_field(const GridField& field, std::ostream& out, Format format) {
  if (format == Format::Csv) {
    write_csv(field, out);
    return;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t it = 0; it < field.nt(); ++it) {
    for (std::size_t ix = 0; ix < field.nx(); ++ix) {
      const auto v = field.at(ix, it);
      rows.push_back({{"x", field.xs[ix]}, {"t", field.ts[it]}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  out << rows.dump(2) << "\n";
}

std::string svg_plot(std::span<const Series> series, const std::string& x_label,
                     const std::string& y_label, bool log_y) {
  constexpr double width = 640, height = 420, left = 70, right = 20, top = 20, bottom = 50;
  auto ty = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(y) || (log_y && y <= 0)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, ty(y));
      y_hi = std::max(y_hi, ty(y));
    }
  }
  if (!(x_hi > x_lo)) x_hi = x_lo + 1;
  if (!(y_hi > y_lo)) y_hi = y_lo + 1;

  auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right); };
  auto py = [&](double y) { return top + (y_hi - ty(y)) / (y_hi - y_lo) * (height - top - bottom); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  svg << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
      << ")\" text-anchor=\"middle\">" << (log_y ? "log10 " : "") << y_label << "</text>\n";
  svg << "<text x=\"" << left - 5 << "\" y=\"" << top + 5 << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_number(y_hi).substr(0, 6) << "</text>\n";
  svg << "<text x=\"" << left - 5 << "\" y=\"" << height - bottom << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_number(y_lo).substr(0, 6) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(y) || (log_y && y <= 0)) continue;
      svg << px(x) << ',' << py(y) << ' ';
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << width - right - 100 << "\" y=\"" << top + 15 * (i + 1) << "\" fill=\"" << color
        << "\" font-size=\"12\">" << series[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace burgers::report
