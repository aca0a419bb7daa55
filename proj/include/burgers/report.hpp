#pragma once

// Output tables. CSV is canonical; JSON carries the same rows as an array of
// objects keyed by the CSV column names.
//
//   sweep_n.csv   N,nu,sup_error
//   sweep_nu.csv  nu,N,sup_error,flag
//   ratio.csv     m,r_m

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burgers/analysis.hpp"
#include "burgers/grid_field.hpp"

namespace burgers::report {

enum class Format { Csv, Json };

void write_sweep_n(std::span<const analysis::ErrorRecord> records, std::ostream& out, Format format);
void write_sweep_nu(std::span<const analysis::ErrorRecord> records, std::ostream& out, Format format);
void write_ratio(std::span<const analysis::RatioEstimate> ratios, std::ostream& out, Format format);
void write_field(const GridField& field, std::ostream& out, Format format);

/// Numbers are printed with 17 significant digits so tables round-trip.
std::string format_number(double value);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Minimal SVG line plot; the y axis is log10 when log_y is set.
std::string svg_plot(std::span<const Series> series, const std::string& x_label,
                     const std::string& y_label, bool log_y);

}  // namespace burgers::report
