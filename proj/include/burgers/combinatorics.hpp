#pragma once

// Exact and floating-point combinatorial kernels: Stirling numbers of the
// second kind, factorial-weighted Stirling sums and partial exponential Bell
// polynomials.

#include <complex>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace burgers::combinatorics {

using ExactInteger = boost::multiprecision::cpp_int;

/// Largest order served by the memoized Stirling tables.
inline constexpr int kMaxOrder = 500;

/// {m brace k}, the number of partitions of an m-set into k non-empty blocks.
/// Requires 1 <= k <= m <= kMaxOrder.
ExactInteger stirling2(int m, int k);

/// S(m) = sum_{k=1}^m (k-1)! {m brace k}. This majorizes the alternating Bell
/// sum of the closed-form terms and drives the ratio constant r.
ExactInteger weighted_stirling_sum(int m);

/// sum_{k=1}^m (-1)^{k-1} (k-1)! {m brace k}; equals 1 for m = 1 and 0 for
/// every m >= 2.
ExactInteger alternating_stirling_sum(int m);

ExactInteger factorial(int n);

/// ln(n!) to double precision.
double log_factorial(int n);

/// Natural logarithm of |value|; -inf for zero. Works far beyond the range
/// of double.
double log_abs(const ExactInteger& value);

/// Arguments x_1..x_{m-k+1} of a partial Bell polynomial B_{m,k}.
class BellArguments {
 public:
  BellArguments() = default;
  explicit BellArguments(std::vector<std::complex<double>> xs) : xs_(std::move(xs)) {}

  std::size_t size() const noexcept { return xs_.size(); }
  /// 1-based, matching x_1..x_n.
  const std::complex<double>& operator()(std::size_t index) const { return xs_.at(index - 1); }
  std::span<const std::complex<double>> values() const noexcept { return xs_; }

 private:
  std::vector<std::complex<double>> xs_;
};

/// B_{m,k}(x_1..x_{m-k+1}) via B_{n,j} = sum_i C(n-1,i-1) x_i B_{n-i,j-1}.
/// Throws DomainError when xs.size() != m-k+1.
std::complex<double> bell_partial(int m, int k, const BellArguments& xs);

/// Same recurrence with exact integer arithmetic.
ExactInteger bell_partial_exact(int m, int k, std::span<const ExactInteger> xs);

}  // namespace burgers::combinatorics
