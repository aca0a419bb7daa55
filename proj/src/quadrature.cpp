#include "burgers/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include <gsl/gsl_integration.h>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

enum class RuleKind { Hermite, Legendre };

QuadratureRule compute_rule(RuleKind kind, int n) {
  const gsl_integration_fixed_type* type =
      kind == RuleKind::Hermite ? gsl_integration_fixed_hermite : gsl_integration_fixed_legendre;
  // Hermite: weight exp(-b (x-a)^2) with a=0, b=1. Legendre: interval [a,b].
  const double a = kind == RuleKind::Hermite ? 0.0 : -1.0;
  const double b = 1.0;
  gsl_integration_fixed_workspace* w = gsl_integration_fixed_alloc(type, n, a, b, 0.0, 0.0);
  if (w == nullptr) throw DomainError("cannot build quadrature rule of order " + std::to_string(n));
  QuadratureRule rule;
  const double* nodes = gsl_integration_fixed_nodes(w);
  const double* weights = gsl_integration_fixed_weights(w);
  rule.nodes.assign(nodes, nodes + n);
  rule.weights.assign(weights, weights + n);
  gsl_integration_fixed_free(w);
  return rule;
}

const QuadratureRule& cached_rule(RuleKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<RuleKind, int>, QuadratureRule> cache;
  if (n < 1) throw DomainError("quadrature order must be positive");
  std::lock_guard lock(mutex);
  auto it = cache.find({kind, n});
  if (it == cache.end()) it = cache.emplace(std::pair{kind, n}, compute_rule(kind, n)).first;
  return it->second;
}

}  // namespace

const QuadratureRule& gauss_hermite(int n) { return cached_rule(RuleKind::Hermite, n); }

const QuadratureRule& gauss_legendre(int n) { return cached_rule(RuleKind::Legendre, n); }

BarycentricInterpolator::BarycentricInterpolator(std::vector<double> nodes)
    : nodes_(std::move(nodes)), weights_(nodes_.size(), 1.0) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw DomainError("interpolator needs at least one node");
  // Scale differences by the interval length so the products stay in range.
  const auto [lo, hi] = std::minmax_element(nodes_.begin(), nodes_.end());
  const double scale = n > 1 ? 4.0 / (*hi - *lo) : 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double product = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const double diff = (nodes_[j] - nodes_[k]) * scale;
      if (diff == 0.0) throw DomainError("interpolation nodes must be distinct");
      product *= diff;
    }
    weights_[j] = 1.0 / product;
  }
}

std::vector<double> BarycentricInterpolator::coefficients(double t) const {
  const std::size_t n = nodes_.size();
  std::vector<double> l(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (t == nodes_[j]) {
      l[j] = 1.0;
      return l;
    }
  }
  double denominator = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    l[j] = weights_[j] / (t - nodes_[j]);
    denominator += l[j];
  }
  for (auto& v : l) v /= denominator;
  return l;
}

std::vector<double> chebyshev_lobatto(int count, double t_end) {
  if (count < 2) throw DomainError("Chebyshev grid needs at least two points");
  std::vector<double> ts(count);
  for (int j = 0; j < count; ++j) {
    ts[j] = 0.5 * t_end * (1.0 - std::cos(std::numbers::pi * j / (count - 1)));
  }
  ts.front() = 0.0;
  ts.back() = t_end;
  return ts;
}

}  // namespace burgers
