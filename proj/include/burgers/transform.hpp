#pragma once

// Truncated sequences of series terms, their Cauchy product, and the
// tag / untag pair that maps a sequence to the tagged series
// sum_n f_n exp(i n s) and back.

#include <complex>
#include <functional>
#include <vector>

#include "burgers/types.hpp"

namespace burgers::transform {

/// One sequence element f_n(x, t).
using SeriesTerm = std::function<std::complex<double>(double x, double t)>;

/// The first N elements of a sequence, indexed from 1.
class TruncatedSequence {
 public:
  explicit TruncatedSequence(std::vector<SeriesTerm> terms);

  std::size_t size() const noexcept { return terms_.size(); }
  const SeriesTerm& operator[](std::size_t n) const;  // 1-based
  std::complex<double> evaluate(std::size_t n, const EvalPoint& p) const;
  /// f_1(p), ..., f_N(p).
  std::vector<std::complex<double>> evaluate_all(const EvalPoint& p) const;

 private:
  std::vector<SeriesTerm> terms_;
};

/// The tag variable s in [-pi, pi].
class TagVariable {
 public:
  explicit TagVariable(double s);
  double value() const noexcept { return s_; }

 private:
  double s_;
};

/// sum_{m=1}^{n-1} a_m(p) b_{n-m}(p), the n-th term of the Cauchy product.
/// Requires 2 <= n <= min(len a, len b) + 1.
std::complex<double> cauchy_convolve(const TruncatedSequence& a, const TruncatedSequence& b,
                                     std::size_t n, const EvalPoint& p);

/// sum_{n=1}^N f_n(p) exp(i n s).
std::complex<double> tag(const TruncatedSequence& seq, const EvalPoint& p, TagVariable s);

/// (1/2pi) int_{-pi}^{pi} tag(seq, p, s) exp(-i m s) ds by the periodic
/// trapezoid rule on s_nodes points. Exact for truncated sequences once
/// s_nodes > 2N; we require s_nodes >= 4N. Returns 0 for m > N.
std::complex<double> untag(const TruncatedSequence& seq, const EvalPoint& p, std::size_t m,
                           std::size_t s_nodes);

}  // namespace burgers::transform
