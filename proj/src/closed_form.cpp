#include "burgers/closed_form.hpp"

#include <cmath>
#include <string>

#include "burgers/combinatorics.hpp"
#include "burgers/errors.hpp"
#include "burgers/quadrature.hpp"

namespace burgers::closed_form {

namespace {

template <class Real>
std::complex<Real> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

template <class Real>
std::complex<Real> unit_phase(int m, Real x) {
  return std::polar(Real(1), static_cast<Real>(m) * x);
}

template <class Real>
std::vector<std::complex<Real>> amplitudes_at_zero(int order, Real nu) {
  std::vector<std::complex<Real>> c(order);
  for (int m = 1; m <= order; ++m) {
    const auto alternating = combinatorics::alternating_stirling_sum(m);
    if (alternating == 0) {
      c[m - 1] = 0;
      continue;
    }
    const Real log_scale = -static_cast<Real>(m - 1) * std::log(2 * nu) -
                           std::lgamma(static_cast<Real>(m));
    c[m - 1] = i_power<Real>(m - 1) * alternating.template convert_to<Real>() * std::exp(log_scale);
  }
  return c;
}

// Amplitudes together with central/one-sided time differences at t.
struct TimeStencil {
  std::vector<std::complex<long double>> value;
  std::vector<std::complex<long double>> dt;
};

TimeStencil time_stencil(int order, long double nu, double t, double h) {
  if (!(h > 0)) throw DomainError("time step h must be positive");
  TimeStencil s;
  s.value = term_amplitudes<long double>(order, nu, t);
  s.dt.resize(order);
  if (t >= h) {
    const auto plus = term_amplitudes<long double>(order, nu, t + h);
    const auto minus = term_amplitudes<long double>(order, nu, t - h);
    for (int m = 0; m < order; ++m) s.dt[m] = (plus[m] - minus[m]) / (2.0L * h);
  } else {
    const auto one = term_amplitudes<long double>(order, nu, t + h);
    const auto two = term_amplitudes<long double>(order, nu, t + 2 * h);
    for (int m = 0; m < order; ++m) {
      s.dt[m] = (-3.0L * s.value[m] + 4.0L * one[m] - two[m]) / (2.0L * h);
    }
  }
  return s;
}

}  // namespace

void validate(const SolverConfig& cfg) {
  if (!(cfg.nu > 0) || !std::isfinite(cfg.nu)) throw DomainError("viscosity nu must be positive");
  if (cfg.N < 1) throw DomainError("truncation order N must be at least 1");
}

template <class Real>
std::vector<std::complex<Real>> term_amplitudes(int order, Real nu, Real t) {
  if (order < 1) throw DomainError("term order must be at least 1");
  if (!(nu > 0)) throw DomainError("viscosity nu must be positive");
  if (!(t >= 0)) throw DomainError("time must be non-negative");
  if (t == 0) return amplitudes_at_zero<Real>(order, nu);

  std::vector<Real> g(order + 1, Real(0));
  for (int j = 1; j <= order; ++j) {
    const Real jj = static_cast<Real>(j);
    g[j] = std::exp(-nu * t * jj * jj - std::lgamma(jj + 1));
  }

  // a[n][k], 1 <= k <= n <= order; a[0][0] = 1 only feeds k = 1.
  std::vector<std::vector<Real>> a(order + 1);
  for (int n = 1; n <= order; ++n) {
    a[n].assign(n + 1, Real(0));
    a[n][1] = g[n];
    for (int k = 2; k <= n; ++k) {
      Real acc = 0;
      for (int j = 1; j <= n - k + 1; ++j) acc += static_cast<Real>(j) * g[j] * a[n - j][k - 1];
      a[n][k] = acc * static_cast<Real>(k - 1) / static_cast<Real>(n);
    }
  }

  std::vector<std::complex<Real>> c(order);
  const Real log_two_nu = std::log(2 * nu);
  for (int m = 1; m <= order; ++m) {
    CompensatedSum<Real> bell;
    for (int k = 1; k <= m; ++k) bell.add(k % 2 == 1 ? a[m][k] : -a[m][k]);
    const Real scale =
        std::exp(std::log(static_cast<Real>(m)) - static_cast<Real>(m - 1) * log_two_nu);
    const std::complex<Real> value = i_power<Real>(m - 1) * (scale * bell.value());
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw OverflowError("non-finite closed-form term at m=" + std::to_string(m), m);
    }
    c[m - 1] = value;
  }
  return c;
}

template std::vector<std::complex<double>> term_amplitudes<double>(int, double, double);
template std::vector<std::complex<long double>> term_amplitudes<long double>(int, long double,
                                                                             long double);

std::complex<double> term(int m, const SolverConfig& cfg, const EvalPoint& p) {
  validate(p);
  if (m < 1) throw DomainError("term index m must be at least 1");
  const auto c = term_amplitudes<long double>(m, cfg.nu, p.t);
  const auto value = c[m - 1] * unit_phase<long double>(m, p.x);
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

std::vector<std::complex<long double>> partial_sums_extended(const SolverConfig& cfg,
                                                             const EvalPoint& p) {
  validate(cfg);
  validate(p);
  const auto c = term_amplitudes<long double>(cfg.N, cfg.nu, p.t);
  std::vector<std::complex<long double>> sums(cfg.N);
  CompensatedSum<std::complex<long double>> sum;
  bool exhausted = false;
  for (int m = 1; m <= cfg.N; ++m) {
    if (!exhausted) {
      if (std::abs(c[m - 1]) < 1e-300L) {
        exhausted = true;
      } else {
        sum.add(c[m - 1] * unit_phase<long double>(m, p.x));
      }
    }
    sums[m - 1] = sum.value();
  }
  return sums;
}

std::complex<double> partial_sum(const SolverConfig& cfg, const EvalPoint& p) {
  const auto sums = partial_sums_extended(cfg, p);
  const auto& u = sums.back();
  return {static_cast<double>(u.real()), static_cast<double>(u.imag())};
}

double term_bound(int m, const SolverConfig& cfg, double t) {
  if (m < 1) throw DomainError("term index m must be at least 1");
  if (!(cfg.nu > 0)) throw DomainError("viscosity nu must be positive");
  if (!(t >= 0)) throw DomainError("time must be non-negative");
  const double log_bound = combinatorics::log_abs(combinatorics::weighted_stirling_sum(m)) -
                           cfg.nu * m * t - (m - 1) * std::log(2.0 * cfg.nu) -
                           combinatorics::log_factorial(m - 1);
  return std::exp(log_bound);
}

std::complex<double> residual(const SolverConfig& cfg, const EvalPoint& p, double h) {
  validate(cfg);
  validate(p);
  const auto s = time_stencil(cfg.N, cfg.nu, p.t, h);
  const long double nu = cfg.nu;
  std::complex<long double> u = 0, u_t = 0, u_x = 0, u_xx = 0;
  for (int m = 1; m <= cfg.N; ++m) {
    const auto phase = unit_phase<long double>(m, p.x);
    const long double mm = m;
    u += s.value[m - 1] * phase;
    u_t += s.dt[m - 1] * phase;
    u_x += std::complex<long double>(0, mm) * s.value[m - 1] * phase;
    u_xx += -mm * mm * s.value[m - 1] * phase;
  }
  const auto r = u_t - nu * u_xx + u * u_x;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::complex<double> recursion_residual(int m, const SolverConfig& cfg, const EvalPoint& p,
                                        double h) {
  validate(p);
  if (m < 1) throw DomainError("term index m must be at least 1");
  const auto s = time_stencil(m, cfg.nu, p.t, h);
  std::vector<std::complex<long double>> f(m + 1);
  for (int l = 1; l <= m; ++l) f[l] = s.value[l - 1] * unit_phase<long double>(l, p.x);
  const long double mm = m;
  std::complex<long double> r =
      s.dt[m - 1] * unit_phase<long double>(m, p.x) + static_cast<long double>(cfg.nu) * mm * mm * f[m];
  for (int l = 1; l < m; ++l) {
    r += f[l] * std::complex<long double>(0, static_cast<long double>(m - l)) * f[m - l];
  }
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

}  // namespace burgers::closed_form
