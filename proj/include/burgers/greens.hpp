#pragma once

// Recursive Green's-function solution of the sequence of linear diffusion
// problems
//   d_t f_1 - nu d_xx f_1 = 0,                     f_1(x,0) = ic(x)
//   d_t f_m - nu d_xx f_m = -sum_{l<m} f_l d_x f_{m-l},  f_m(x,0) = 0
// on the real line, for periodic (or whole-line) initial data.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "burgers/grid_field.hpp"
#include "burgers/types.hpp"

namespace burgers::greens {

struct HeatKernelParams {
  double nu = 1.0;
  double x = 0.0;
  double t = 0.0;
  double x0 = 0.0;
  double t0 = 0.0;
};

/// Free-space heat kernel (4 pi nu (t-t0))^{-1/2} exp(-(x-x0)^2 / (4 nu (t-t0)))
/// for t > t0, zero otherwise. At t == t0 the kernel is a delta; 0 is returned
/// and *near_singular (if given) is set.
double heat_kernel(const HeatKernelParams& params, bool* near_singular = nullptr);

struct QuadratureSpec {
  int hermite_nodes = 64;
  int time_nodes = 32;
  double sub_tol = 1e-7;
};

/// hermite_nodes >= 8, time_nodes >= 4, sub_tol > 0.
void validate(const QuadratureSpec& q);

enum class Backend {
  /// Exact per-mode heat propagation e^{-nu k^2 dt} on the periodic grid.
  PeriodicSpectral,
  /// Gauss-Hermite quadrature of the kernel convolution at shifted nodes.
  GaussHermite,
};

using InitialCondition = std::function<std::complex<double>(double x)>;

/// Periodic grid with Chebyshev-Lobatto time levels on [0, t_end].
GridField make_grid(std::size_t nx, double period, std::size_t nt, double t_end);

/// 128 x-nodes over [0, 2 pi), 64 time levels on [0, 3].
GridField default_grid();

/// int G(x,t; x0,0) ic(x0) dx0 via Gauss-Hermite after x0 = x + 2 sqrt(nu t) u.
/// Returns ic(x) at t == 0. Throws InputError on a non-finite ic sample.
std::complex<double> first_term(const InitialCondition& ic, double nu, const EvalPoint& p,
                                const QuadratureSpec& q = {});

/// A sampled term together with its spectral x-derivative.
struct TermField {
  GridField value;
  GridField dx;
};

TermField with_derivative(const GridField& field);

/// sum_{l=1}^{m-1} f_l d_x f_{m-l} at grid node (ix, it). terms[l-1] holds f_l.
/// Throws DependencyError when fewer than m-1 terms are available.
std::complex<double> source(std::span<const TermField> terms, int m, std::size_t ix,
                            std::size_t it);

GridField source_field(std::span<const TermField> terms, int m);

/// f_1 sampled on the grid (ic must be periodic with the grid's period).
GridField first_term_field(const InitialCondition& ic, double nu, const GridField& grid,
                           const QuadratureSpec& q = {},
                           Backend backend = Backend::PeriodicSpectral);

/// f_m = -int_0^t int G(x,t; x0,t0) source_m(x0,t0) dx0 dt0 on every node.
/// The time integral uses t0 = t - sigma^2 with Gauss-Legendre in sigma;
/// source values between time levels come from barycentric interpolation.
/// The error estimate compares against a rule with half the time nodes and
/// throws AccuracyError at the worst node when it exceeds q.sub_tol.
GridField next_term(int m, std::span<const GridField> prior, double nu, const GridField& grid,
                    const QuadratureSpec& q = {}, Backend backend = Backend::PeriodicSpectral);

struct RecursionResult {
  std::vector<GridField> terms;
  GridField partial_sum;
};

RecursionResult recurse(const InitialCondition& ic, double nu, const GridField& grid, int order,
                        const QuadratureSpec& q = {},
                        Backend backend = Backend::PeriodicSpectral);

}  // namespace burgers::greens
