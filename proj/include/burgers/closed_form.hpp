#pragma once

// Closed-form sequence solution of u_t - nu u_xx + u u_x = 0 with
// u(x, 0) = exp(i x), evaluated on the real line.
//
//   f_m(x,t) = i^{m-1} e^{-nu m^2 t + i m x} / ((2 nu)^{m-1} (m-1)!)
//              * sum_{k=1}^m (-1)^{k-1} (k-1)! B_{m,k}(mu_1, ..., mu_{m-k+1}),
//   mu_l = exp(l nu t (m - l)).
//
// Every term is c_m(t) exp(i m x); the amplitudes c_m(t) carry all the work.

#include <complex>
#include <vector>

#include "burgers/types.hpp"

namespace burgers::closed_form {

struct SolverConfig {
  double nu = 0.3;
  int N = 30;
};

/// Throws DomainError unless nu > 0 and N >= 1.
void validate(const SolverConfig& cfg);

/// c_1(t), ..., c_order(t). At t = 0 the amplitudes come from the exact
/// alternating Stirling sum, so c_m(0) == 0 exactly for m >= 2.
///
/// The Bell arguments factor as mu_l = e^{nu t m l} e^{-nu t l^2}; the first
/// factor contributes e^{nu t m^2} to every monomial of B_{m,k} and cancels
/// the prefactor e^{-nu m^2 t}. What remains is evaluated through
/// the scaled recurrence a_{n,k} = (k-1)!/n! B_{n,k}(e^{-nu t l^2}),
///   a_{n,1} = g_n,  a_{n,k} = (k-1)/n sum_j j g_j a_{n-j,k-1},
/// with g_j = e^{-nu t j^2} / j! built in log space. All monomials are then
/// bounded by one and nothing overflows for any order.
template <class Real>
std::vector<std::complex<Real>> term_amplitudes(int order, Real nu, Real t);

/// f_m at p. Throws OverflowError if an intermediate is non-finite.
std::complex<double> term(int m, const SolverConfig& cfg, const EvalPoint& p);

/// U_N(x,t) = sum_{m=1}^N f_m(x,t). Terms with |f_m| < 1e-300 end the sum.
std::complex<double> partial_sum(const SolverConfig& cfg, const EvalPoint& p);

/// Extended-precision partial sums U_1..U_N at one point.
std::vector<std::complex<long double>> partial_sums_extended(const SolverConfig& cfg,
                                                             const EvalPoint& p);

/// e^{-nu m t} S(m) / ((2 nu)^{m-1} (m-1)!), the Weierstrass majorant of
/// |f_m| with S(m) the factorial-weighted Stirling sum.
double term_bound(int m, const SolverConfig& cfg, double t);

/// Burgers operator applied to U_N at p: d_t U - nu d_xx U + U d_x U with
/// exact x-derivatives and a central time difference of step h (second
/// order one-sided forward stencil when t < h).
std::complex<double> residual(const SolverConfig& cfg, const EvalPoint& p, double h = 1e-4);

/// Residual of the m-th linear diffusion equation
///   d_t f_m - nu d_xx f_m + sum_{l=1}^{m-1} f_l d_x f_{m-l}
/// with the same stencils as residual().
std::complex<double> recursion_residual(int m, const SolverConfig& cfg, const EvalPoint& p,
                                        double h = 1e-4);

}  // namespace burgers::closed_form
