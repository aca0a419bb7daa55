#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace burgers {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-u^2) on the real line. Memoized.
const QuadratureRule& gauss_hermite(int n);

/// Gauss-Legendre rule on [-1, 1]. Memoized.
const QuadratureRule& gauss_legendre(int n);

/// Neumaier-compensated running sum.
template <class Real>
class CompensatedSum {
 public:
  void add(Real value) {
    const Real total = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - total) + value;
    } else {
      compensation_ += (value - total) + sum_;
    }
    sum_ = total;
  }
  Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

template <class Real>
class CompensatedSum<std::complex<Real>> {
 public:
  void add(const std::complex<Real>& value) {
    re_.add(value.real());
    im_.add(value.imag());
  }
  std::complex<Real> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

/// Barycentric Lagrange interpolation through arbitrary distinct nodes.
class BarycentricInterpolator {
 public:
  BarycentricInterpolator() = default;
  explicit BarycentricInterpolator(std::vector<double> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  /// Interpolation weights l_j(t) such that p(t) = sum_j l_j(t) y_j.
  std::vector<double> coefficients(double t) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Chebyshev-Gauss-Lobatto points mapped to [0, t_end], ascending.
std::vector<double> chebyshev_lobatto(int count, double t_end);

}  // namespace burgers
