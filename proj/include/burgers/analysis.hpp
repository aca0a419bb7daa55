#pragma once

// Convergence studies: sup-norm error of U_N against the Cole-Hopf solution
// as a function of N and of nu, and the ratio-test constant r.

#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "burgers/grid_field.hpp"
#include "burgers/reference.hpp"

namespace burgers::analysis {

/// Rectangular sampling of the study domain; both ends of each axis included.
struct DomainSpec {
  double x_min = -2.0 * std::numbers::pi;
  double x_max = 2.0 * std::numbers::pi;
  double t_min = 0.0;
  double t_max = 3.0;
  std::size_t nx = 65;
  std::size_t nt = 31;
};

/// x_min < x_max, 0 <= t_min <= t_max, nx, nt >= 1. A degenerate time axis
/// (t_min == t_max) is allowed.
void validate(const DomainSpec& dom);

std::vector<double> x_nodes(const DomainSpec& dom);
std::vector<double> t_nodes(const DomainSpec& dom);

struct ErrorRecord {
  int N = 0;
  double nu = 0.0;
  double sup_error = 0.0;
  /// Set when the partial sum exceeded 1e10, or anything was non-finite, or
  /// the reference failed somewhere on the domain.
  bool flagged = false;
};

/// max over nodes of |a - b|. Throws DomainError on grid mismatch.
template <class Real>
double sup_error(const BasicGridField<Real>& a, const BasicGridField<Real>& b);

/// Cole-Hopf reference on the domain in extended precision. Nodes at t == 0
/// take the initial condition exp(i x). Nodes where the reference failed are
/// listed in `failed` (value left as NaN) instead of aborting.
struct ReferenceField {
  ExtendedGridField values;
  std::vector<std::size_t> failed;
};

ReferenceField cole_hopf_field(double nu, const DomainSpec& dom,
                               const reference::ColeHopfSpec& spec = reference::extended_spec());

/// U_N from the closed form on the domain, extended precision.
ExtendedGridField closed_form_field(double nu, int N, const DomainSpec& dom);

/// Records for N = 1..N_max. A reference failure propagates as an exception.
std::vector<ErrorRecord> sweep_N(double nu, int N_max, const DomainSpec& dom = {});

/// One record per (nu, N), nu outer. Reference failures and blow-ups flag the
/// cell; the sweep always completes.
std::vector<ErrorRecord> sweep_nu(std::span<const int> N_list, std::span<const double> nu_grid,
                                  const DomainSpec& dom = {});

struct RatioEstimate {
  int m = 0;
  double r = 0.0;
};

/// r_m = S(m+1) / (m S(m)) for m = 1..m_max, exact until the final division.
/// Requires 2 <= m_max <= 300.
std::vector<RatioEstimate> estimate_r(int m_max);

/// Richardson (Neville) extrapolation of r_m in h = 1/m to h -> 0, using
/// m_max/4, m_max/2 and m_max.
double richardson_limit(std::span<const RatioEstimate> ratios);

/// nu above which the Weierstrass bound series converges for all t >= 0.
double convergence_threshold(double r);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of ln(sup_error) against N.
LinearFit fit_log_error(std::span<const ErrorRecord> records);

/// Largest nu (for the given N) whose cell is flagged or has sup_error >= level,
/// i.e. where U_N stops approximating a solution of unit size.
std::optional<double> upturn_onset(std::span<const ErrorRecord> records, int N, double level = 1.0);

}  // namespace burgers::analysis
