#pragma once

// Complex samples on a rectangular (x, t) grid.
//
// Values are stored time-major: values[it * nx + ix]. A field with
// period > 0 is periodic in x with xs covering one period [x0, x0 + period).
//
// CSV layout: header "x,t,re,im", one row per node, t outer / x inner,
// numbers printed with 17 significant digits.
//
// Binary layout (all little-endian):
//   char[4]  magic "BGF1"
//   uint32   version (1)
//   uint64   nx
//   uint64   nt
//   float64  period (0 for non-periodic)
//   float64  xs[nx]
//   float64  ts[nt]
//   float64  values[nt][nx][2]   (re, im)

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "burgers/quadrature.hpp"

namespace burgers {

template <class Real>
struct BasicGridField {
  std::vector<Real> xs;
  std::vector<Real> ts;
  std::vector<std::complex<Real>> values;
  Real period = 0;

  BasicGridField() = default;
  BasicGridField(std::vector<Real> xs_, std::vector<Real> ts_, Real period_ = 0)
      : xs(std::move(xs_)), ts(std::move(ts_)), values(xs.size() * ts.size()), period(period_) {}

  std::size_t nx() const noexcept { return xs.size(); }
  std::size_t nt() const noexcept { return ts.size(); }
  bool periodic() const noexcept { return period > 0; }

  std::complex<Real>& at(std::size_t ix, std::size_t it) { return values[it * xs.size() + ix]; }
  const std::complex<Real>& at(std::size_t ix, std::size_t it) const {
    return values[it * xs.size() + ix];
  }
};

using GridField = BasicGridField<double>;
using ExtendedGridField = BasicGridField<long double>;

/// n evenly spaced values on [lo, hi] (both ends included; n == 1 gives lo).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Periodic grid: nx nodes j * period / nx, zero-filled values.
GridField periodic_grid(std::size_t nx, double period, std::vector<double> ts);

/// Throws DomainError unless xs is uniform, sizes agree and values are finite.
void validate(const GridField& field);

template <class Real>
bool same_grid(const BasicGridField<Real>& a, const BasicGridField<Real>& b) {
  return a.xs == b.xs && a.ts == b.ts && a.values.size() == b.values.size();
}

GridField operator+(const GridField& a, const GridField& b);

/// Evaluates a periodic field off-grid: trigonometric interpolation in x,
/// barycentric Lagrange in t.
class FieldSampler {
 public:
  explicit FieldSampler(const GridField& field);
  std::complex<double> operator()(double x, double t) const;
  /// Spectral coefficients (normalized) interpolated to time t.
  std::vector<std::complex<double>> coefficients_at(double t) const;

 private:
  double period_;
  double x0_;
  BarycentricInterpolator time_;
  std::vector<std::vector<std::complex<double>>> coefficients_;
};

void write_csv(const GridField& field, std::ostream& out);
GridField read_csv(std::istream& in, double period = 0.0);
void write_binary(const GridField& field, std::ostream& out);
GridField read_binary(std::istream& in);

}  // namespace burgers
