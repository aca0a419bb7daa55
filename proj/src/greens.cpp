#include "burgers/greens.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/parallel.hpp"
#include "burgers/quadrature.hpp"
#include "burgers/spectral.hpp"

namespace burgers::greens {

namespace {

void check_nu(double nu) {
  if (!(nu > 0) || !std::isfinite(nu)) throw DomainError("viscosity nu must be positive");
}

void check_engine_grid(const GridField& grid) {
  if (!grid.periodic()) throw DomainError("the Green's engine needs a periodic grid");
  if (grid.nx() < 4) throw DomainError("the Green's engine needs at least 4 x-nodes");
  if (grid.ts.empty() || grid.ts.front() != 0.0) {
    throw DomainError("the Green's engine grid must start at t = 0");
  }
  for (std::size_t i = 1; i < grid.nt(); ++i) {
    if (!(grid.ts[i] > grid.ts[i - 1])) throw DomainError("time levels must increase");
  }
}

std::complex<double> checked(std::complex<double> v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw InputError("initial condition is not finite at x=" + std::to_string(x));
  }
  return v;
}

// Spectral (unnormalized FFT) rows of a field, one per time level.
std::vector<std::vector<std::complex<double>>> spectral_rows(const GridField& field,
                                                             const FourierTransform& fft) {
  const std::size_t nx = field.nx();
  std::vector<std::vector<std::complex<double>>> rows(field.nt());
  for (std::size_t it = 0; it < field.nt(); ++it) {
    rows[it].assign(field.values.begin() + it * nx, field.values.begin() + (it + 1) * nx);
    fft.forward(rows[it]);
  }
  return rows;
}

// Time-integrated Duhamel modes for one output level using an n-point rule.
// For the spectral backend the result is in Fourier space; for Gauss-Hermite
// it is already in physical space.
struct DuhamelContext {
  const GridField& grid;
  const std::vector<std::vector<std::complex<double>>>& source_modes;
  const BarycentricInterpolator& time;
  const std::vector<double>& k;
  const FourierTransform& fft;
  double nu;
  Backend backend;
  int hermite_nodes;
};

std::vector<std::complex<double>> interpolate_modes(const DuhamelContext& ctx, double t0) {
  const auto l = ctx.time.coefficients(t0);
  const std::size_t nx = ctx.grid.nx();
  std::vector<std::complex<double>> modes(nx, 0.0);
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] == 0.0) continue;
    const auto& row = ctx.source_modes[j];
    for (std::size_t q = 0; q < nx; ++q) modes[q] += l[j] * row[q];
  }
  return modes;
}

// Returns -int_0^t (propagated source) dt0 sampled on the x-grid.
std::vector<std::complex<double>> duhamel_level(const DuhamelContext& ctx, double t, int nodes) {
  const std::size_t nx = ctx.grid.nx();
  std::vector<std::complex<double>> acc(nx, 0.0);
  if (t == 0.0) return acc;

  const auto& rule = gauss_legendre(nodes);
  const double sigma_max = std::sqrt(t);
  for (int i = 0; i < nodes; ++i) {
    const double sigma = 0.5 * sigma_max * (rule.nodes[i] + 1.0);
    const double weight = 0.5 * sigma_max * rule.weights[i] * 2.0 * sigma;
    const double t0 = std::max(0.0, t - sigma * sigma);
    auto modes = interpolate_modes(ctx, t0);

    if (ctx.backend == Backend::PeriodicSpectral) {
      for (std::size_t q = 0; q < nx; ++q) {
        acc[q] += weight * std::exp(-ctx.nu * ctx.k[q] * ctx.k[q] * sigma * sigma) * modes[q];
      }
      continue;
    }

    // Gauss-Hermite: (1/sqrt(pi)) sum_h w_h S(x + 2 sigma sqrt(nu) u_h, t0);
    // the shifted samples come from the trigonometric interpolant.
    const auto& gh = gauss_hermite(ctx.hermite_nodes);
    const double spread = 2.0 * sigma * std::sqrt(ctx.nu);
    std::vector<std::complex<double>> shifted(nx);
    for (int h = 0; h < ctx.hermite_nodes; ++h) {
      const double delta = spread * gh.nodes[h];
      for (std::size_t q = 0; q < nx; ++q) {
        std::complex<double> mode = modes[q];
        if (nx % 2 == 0 && q == nx / 2) {
          mode *= std::cos(ctx.k[q] * delta);
        } else {
          mode *= std::polar(1.0, ctx.k[q] * delta);
        }
        shifted[q] = mode;
      }
      ctx.fft.inverse(shifted);
      const double w = weight * gh.weights[h] / std::sqrt(std::numbers::pi);
      for (std::size_t q = 0; q < nx; ++q) acc[q] += w * shifted[q];
    }
  }

  if (ctx.backend == Backend::PeriodicSpectral) ctx.fft.inverse(acc);
  for (auto& v : acc) v = -v;
  return acc;
}

}  // namespace

double heat_kernel(const HeatKernelParams& p, bool* near_singular) {
  check_nu(p.nu);
  const double dt = p.t - p.t0;
  if (near_singular != nullptr) *near_singular = (dt == 0.0);
  if (!(dt > 0)) return 0.0;
  const double dx = p.x - p.x0;
  return std::exp(-dx * dx / (4.0 * p.nu * dt)) / std::sqrt(4.0 * std::numbers::pi * p.nu * dt);
}

void validate(const QuadratureSpec& q) {
  if (q.hermite_nodes < 8) throw DomainError("hermite_nodes must be at least 8");
  if (q.time_nodes < 4) throw DomainError("time_nodes must be at least 4");
  if (!(q.sub_tol > 0)) throw DomainError("sub_tol must be positive");
}

GridField make_grid(std::size_t nx, double period, std::size_t nt, double t_end) {
  if (!(t_end > 0)) throw DomainError("grid end time must be positive");
  return periodic_grid(nx, period, chebyshev_lobatto(static_cast<int>(nt), t_end));
}

GridField default_grid() { return make_grid(128, 2.0 * std::numbers::pi, 64, 3.0); }

std::complex<double> first_term(const InitialCondition& ic, double nu, const EvalPoint& p,
                                const QuadratureSpec& q) {
  check_nu(nu);
  validate(p);
  validate(q);
  if (p.t == 0.0) return checked(ic(p.x), p.x);
  const auto& gh = gauss_hermite(q.hermite_nodes);
  const double spread = 2.0 * std::sqrt(nu * p.t);
  CompensatedSum<std::complex<double>> sum;
  for (int i = 0; i < q.hermite_nodes; ++i) {
    const double x0 = p.x + spread * gh.nodes[i];
    sum.add(gh.weights[i] * checked(ic(x0), x0));
  }
  return sum.value() / std::sqrt(std::numbers::pi);
}

TermField with_derivative(const GridField& field) {
  if (!field.periodic()) throw DomainError("spectral derivative needs a periodic field");
  TermField out{field, field};
  const std::size_t nx = field.nx();
  for (std::size_t it = 0; it < field.nt(); ++it) {
    std::span<const std::complex<double>> row(field.values.data() + it * nx, nx);
    const auto d = spectral_derivative(row, field.period);
    std::copy(d.begin(), d.end(), out.dx.values.begin() + it * nx);
  }
  return out;
}

std::complex<double> source(std::span<const TermField> terms, int m, std::size_t ix,
                            std::size_t it) {
  if (m < 2) throw DomainError("the nonlinear source starts at m = 2");
  if (terms.size() < static_cast<std::size_t>(m - 1)) {
    throw DependencyError("source for m=" + std::to_string(m) + " needs terms 1.." +
                          std::to_string(m - 1) + ", only " + std::to_string(terms.size()) +
                          " available");
  }
  std::complex<double> sum = 0.0;
  for (int l = 1; l < m; ++l) sum += terms[l - 1].value.at(ix, it) * terms[m - l - 1].dx.at(ix, it);
  return sum;
}

GridField source_field(std::span<const TermField> terms, int m) {
  if (terms.empty()) throw DependencyError("source needs at least one prior term");
  GridField out = terms.front().value;
  for (std::size_t it = 0; it < out.nt(); ++it) {
    for (std::size_t ix = 0; ix < out.nx(); ++ix) out.at(ix, it) = source(terms, m, ix, it);
  }
  return out;
}

GridField first_term_field(const InitialCondition& ic, double nu, const GridField& grid,
                           const QuadratureSpec& q, Backend backend) {
  check_nu(nu);
  check_engine_grid(grid);
  validate(q);
  GridField out(grid.xs, grid.ts, grid.period);
  const std::size_t nx = grid.nx();

  if (backend == Backend::GaussHermite) {
    parallel_for(grid.nt(), [&](std::size_t it) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        out.at(ix, it) = first_term(ic, nu, {grid.xs[ix], grid.ts[it]}, q);
      }
    });
    return out;
  }

  FourierTransform fft(static_cast<int>(nx));
  std::vector<std::complex<double>> modes(nx);
  for (std::size_t ix = 0; ix < nx; ++ix) modes[ix] = checked(ic(grid.xs[ix]), grid.xs[ix]);
  fft.forward(modes);
  const auto k = wavenumbers(static_cast<int>(nx), grid.period);
  for (std::size_t it = 0; it < grid.nt(); ++it) {
    std::vector<std::complex<double>> row(nx);
    for (std::size_t q2 = 0; q2 < nx; ++q2) {
      row[q2] = modes[q2] * std::exp(-nu * k[q2] * k[q2] * grid.ts[it]);
    }
    fft.inverse(row);
    std::copy(row.begin(), row.end(), out.values.begin() + it * nx);
  }
  return out;
}

GridField next_term(int m, std::span<const GridField> prior, double nu, const GridField& grid,
                    const QuadratureSpec& q, Backend backend) {
  check_nu(nu);
  check_engine_grid(grid);
  validate(q);
  if (m < 2) throw DomainError("next_term computes m >= 2; use first_term_field for m = 1");
  if (prior.size() < static_cast<std::size_t>(m - 1)) {
    throw DependencyError("next_term(m=" + std::to_string(m) + ") needs " +
                          std::to_string(m - 1) + " prior terms, got " +
                          std::to_string(prior.size()));
  }
  for (int l = 0; l < m - 1; ++l) {
    if (!same_grid(prior[l], grid)) throw DomainError("prior term on a different grid");
  }

  std::vector<TermField> terms;
  terms.reserve(m - 1);
  for (int l = 0; l < m - 1; ++l) terms.push_back(with_derivative(prior[l]));
  const GridField s = source_field(terms, m);

  const std::size_t nx = grid.nx();
  const FourierTransform fft(static_cast<int>(nx));
  const auto modes = spectral_rows(s, fft);
  const BarycentricInterpolator time(grid.ts);
  const auto k = wavenumbers(static_cast<int>(nx), grid.period);
  const DuhamelContext ctx{grid, modes, time, k, fft, nu, backend, q.hermite_nodes};

  GridField out(grid.xs, grid.ts, grid.period);
  std::vector<double> worst_error(grid.nt(), 0.0);
  std::vector<std::size_t> worst_node(grid.nt(), 0);

  parallel_for(grid.nt(), [&](std::size_t it) {
    const double t = grid.ts[it];
    const auto full = duhamel_level(ctx, t, q.time_nodes);
    const auto coarse = duhamel_level(ctx, t, std::max(2, q.time_nodes / 2));
    for (std::size_t ix = 0; ix < nx; ++ix) {
      out.at(ix, it) = full[ix];
      const double e = std::abs(full[ix] - coarse[ix]);
      if (e > worst_error[it]) {
        worst_error[it] = e;
        worst_node[it] = ix;
      }
    }
  });

  const auto worst = static_cast<std::size_t>(
      std::max_element(worst_error.begin(), worst_error.end()) - worst_error.begin());
  if (worst_error[worst] > q.sub_tol) {
    const double x = grid.xs[worst_node[worst]];
    throw AccuracyError("time quadrature for f_" + std::to_string(m) +
                            " missed sub_tol: estimated error " +
                            std::to_string(worst_error[worst]) + " at x=" + std::to_string(x) +
                            ", t=" + std::to_string(grid.ts[worst]),
                        worst_error[worst], x, grid.ts[worst]);
  }
  return out;
}

RecursionResult recurse(const InitialCondition& ic, double nu, const GridField& grid, int order,
                        const QuadratureSpec& q, Backend backend) {
  if (order < 1) throw DomainError("recursion order N must be at least 1");
  RecursionResult result;
  result.terms.reserve(order);
  result.terms.push_back(first_term_field(ic, nu, grid, q, backend));
  for (int m = 2; m <= order; ++m) {
    result.terms.push_back(next_term(m, result.terms, nu, grid, q, backend));
  }
  result.partial_sum = result.terms.front();
  for (std::size_t l = 1; l < result.terms.size(); ++l) {
    result.partial_sum = result.partial_sum + result.terms[l];
  }
  return result;
}

}  // namespace burgers::greens
