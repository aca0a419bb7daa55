#pragma once

// Independent reference solutions for u(x,0) = exp(i x):
// Cole-Hopf quadrature and a pseudo-spectral time stepper.

#include <complex>
#include <span>
#include <vector>

#include "burgers/grid_field.hpp"

namespace burgers::reference {

struct ColeHopfSpec {
  /// Half-width of the integration window in units of sqrt(4 nu t).
  double truncation_radius = 8.0;
  double tol = 1e-12;
  int max_subdivisions = 4096;
};

/// truncation_radius >= 6, tol > 0, max_subdivisions >= 1.
void validate(const ColeHopfSpec& spec);

/// Cole-Hopf solution
///   U = int (x-x0)/t e^{-(x-x0)^2/(4 nu t) + (i/2nu)(e^{i x0}-1)} dx0
///       / int e^{-(x-x0)^2/(4 nu t) + (i/2nu)(e^{i x0}-1)} dx0
/// with adaptive Gauss-Kronrod on x0 = x + sqrt(4 nu t) u, |u| <= R.
/// Requires t > 0. Throws NearSingularError when |denominator| < 1e-14 and
/// AccuracyError when the estimated error exceeds tol * max(1, |U|).
template <class Real>
std::complex<Real> cole_hopf(Real nu, Real x, Real t, const ColeHopfSpec& spec = {});

/// Spec suited to long double sweeps where errors reach 1e-16.
ColeHopfSpec extended_spec();

struct FdOptions {
  /// Drop u u_x (pure heat equation); used to test the integrating factor.
  bool nonlinear = true;
};

/// Largest dt accepted by fd_solve: RK4 covers |lambda dt| <= 2.8 on the
/// imaginary axis and the advective eigenvalues are bounded by k_max max|u0|.
/// Diffusion is integrated exactly and imposes no limit.
double fd_stable_step(std::span<const std::complex<double>> ic, double period);

/// u_t = nu u_xx - u u_x on a periodic grid of power-of-two size, spectral in
/// x, integrating factor e^{-nu k^2 t} for diffusion and classical RK4 for the
/// nonlinear term. Returns samples at the requested (ascending) output times.
/// Throws BlowUpError with the failing time when the field becomes non-finite.
GridField fd_solve(std::span<const std::complex<double>> ic, double period, double nu,
                   double t_end, double dt, std::span<const double> outputs,
                   const FdOptions& options = {});

}  // namespace burgers::reference
