#include "burgers/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/quadrature.hpp"

namespace burgers {

void validate(const EvalPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.t)) throw DomainError("evaluation point is not finite");
  if (p.t < 0.0) throw DomainError("evaluation time must be non-negative");
}

}  // namespace burgers

namespace burgers::transform {

TruncatedSequence::TruncatedSequence(std::vector<SeriesTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("a truncated sequence needs at least one term");
}

const SeriesTerm& TruncatedSequence::operator[](std::size_t n) const {
  if (n < 1 || n > terms_.size()) {
    throw DomainError("sequence index " + std::to_string(n) + " outside 1.." +
                      std::to_string(terms_.size()));
  }
  return terms_[n - 1];
}

std::complex<double> TruncatedSequence::evaluate(std::size_t n, const EvalPoint& p) const {
  return (*this)[n](p.x, p.t);
}

std::vector<std::complex<double>> TruncatedSequence::evaluate_all(const EvalPoint& p) const {
  std::vector<std::complex<double>> out;
  out.reserve(terms_.size());
  for (const auto& f : terms_) out.push_back(f(p.x, p.t));
  return out;
}

TagVariable::TagVariable(double s) : s_(s) {
  if (!(s >= -std::numbers::pi && s <= std::numbers::pi)) {
    throw DomainError("tag variable must lie in [-pi, pi]");
  }
}

std::complex<double> cauchy_convolve(const TruncatedSequence& a, const TruncatedSequence& b,
                                     std::size_t n, const EvalPoint& p) {
  const std::size_t limit = std::min(a.size(), b.size()) + 1;
  if (n < 2 || n > limit) {
    throw DomainError("Cauchy index " + std::to_string(n) + " outside 2.." + std::to_string(limit));
  }
  CompensatedSum<std::complex<double>> sum;
  for (std::size_t m = 1; m < n; ++m) sum.add(a.evaluate(m, p) * b.evaluate(n - m, p));
  return sum.value();
}

std::complex<double> tag(const TruncatedSequence& seq, const EvalPoint& p, TagVariable s) {
  CompensatedSum<std::complex<double>> sum;
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    sum.add(seq.evaluate(n, p) * std::polar(1.0, static_cast<double>(n) * s.value()));
  }
  return sum.value();
}

std::complex<double> untag(const TruncatedSequence& seq, const EvalPoint& p, std::size_t m,
                           std::size_t s_nodes) {
  if (s_nodes < 4 * seq.size()) {
    throw DomainError("untag needs at least " + std::to_string(4 * seq.size()) +
                      " s-nodes for a " + std::to_string(seq.size()) + "-term sequence, got " +
                      std::to_string(s_nodes));
  }
  if (m == 0) throw DomainError("untag index is 1-based");
  if (m > seq.size()) return 0.0;

  const auto terms = seq.evaluate_all(p);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(s_nodes);
  CompensatedSum<std::complex<double>> sum;
  for (std::size_t j = 0; j < s_nodes; ++j) {
    const double s = -std::numbers::pi + h * static_cast<double>(j);
    CompensatedSum<std::complex<double>> tagged;
    for (std::size_t n = 1; n <= terms.size(); ++n) {
      tagged.add(terms[n - 1] * std::polar(1.0, static_cast<double>(n) * s));
    }
    sum.add(tagged.value() * std::polar(1.0, -static_cast<double>(m) * s));
  }
  return sum.value() / static_cast<double>(s_nodes);
}

}  // namespace burgers::transform
