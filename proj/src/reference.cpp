#include "burgers/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "burgers/errors.hpp"
#include "burgers/spectral.hpp"

namespace burgers::reference {

void validate(const ColeHopfSpec& spec) {
  if (!(spec.truncation_radius >= 6.0)) throw DomainError("truncation_radius must be at least 6");
  if (!(spec.tol > 0)) throw DomainError("Cole-Hopf tolerance must be positive");
  if (spec.max_subdivisions < 1) throw DomainError("max_subdivisions must be positive");
}

ColeHopfSpec extended_spec() { return {8.0, 1e-16, 1 << 14}; }

template <class Real>
std::complex<Real> cole_hopf(Real nu, Real x, Real t, const ColeHopfSpec& spec) {
  validate(spec);
  if (!(nu > 0)) throw DomainError("viscosity nu must be positive");
  if (!(t > 0)) throw DomainError("Cole-Hopf evaluation needs t > 0");

  using Complex = std::complex<Real>;
  const Real width = std::sqrt(4 * nu * t);
  const Real half_over_nu = Real(1) / (2 * nu);
  auto weight = [&](Real u) {
    const Real x0 = x + width * u;
    // -u^2 + (i / 2nu) e^{i x0}; the constant -i/2nu cancels in the ratio.
    const Real re = -u * u - half_over_nu * std::sin(x0);
    const Real im = half_over_nu * std::cos(x0);
    return std::polar(std::exp(re), im);
  };

  using Integrator = boost::math::quadrature::gauss_kronrod<Real, 31>;
  const Real radius = static_cast<Real>(spec.truncation_radius);
  const auto depth = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(spec.max_subdivisions)));
  const Real tol = static_cast<Real>(spec.tol);

  const double xd = static_cast<double>(x);
  const double td = static_cast<double>(t);
  // Boost measures its tolerance against the L1 norm of each integrand, which
  // can exceed |den| by orders of magnitude when the weight oscillates. The
  // request is tightened until the ratio itself meets tol.
  Real estimate = 0;
  Complex u = 0;
  Real request = tol;
  for (int attempt = 0; attempt < 4; ++attempt, request /= 100) {
    Real den_error = 0;
    Real num_error = 0;
    const Complex den = Integrator::integrate(weight, -radius, radius, depth, request, &den_error);
    const Complex num = Integrator::integrate([&](Real v) { return v * weight(v); }, -radius,
                                              radius, depth, request, &num_error);
    if (std::abs(den) < Real(1e-14)) {
      throw NearSingularError("Cole-Hopf denominator vanishes at x=" + std::to_string(xd) +
                                  ", t=" + std::to_string(td),
                              xd, td);
    }
    u = -(width / t) * num / den;
    estimate = (width / t) * num_error / std::abs(den) + std::abs(u) * den_error / std::abs(den);
    if (estimate <= tol * std::max(Real(1), std::abs(u))) return u;
  }
  throw AccuracyError("Cole-Hopf quadrature missed tolerance at x=" + std::to_string(xd) +
                          ", t=" + std::to_string(td),
                      static_cast<double>(estimate), xd, td);
}

template std::complex<double> cole_hopf<double>(double, double, double, const ColeHopfSpec&);
template std::complex<long double> cole_hopf<long double>(long double, long double, long double,
                                                          const ColeHopfSpec&);

namespace {

struct NonlinearTerm {
  const FourierTransform& fft;
  std::vector<std::complex<double>> ik_half;  // -(i k)/2 with the Nyquist mode removed
  bool enabled;

  // -(u^2/2)_x in Fourier space.
  std::vector<std::complex<double>> operator()(const std::vector<std::complex<double>>& modes) const {
    std::vector<std::complex<double>> out(modes.size(), 0.0);
    if (!enabled) return out;
    out = modes;
    fft.inverse(out);
    for (auto& v : out) v *= v;
    fft.forward(out);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] *= ik_half[j];
    return out;
  }
};

bool finite(const std::vector<std::complex<double>>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

}  // namespace

double fd_stable_step(std::span<const std::complex<double>> ic, double period) {
  double umax = 0;
  for (const auto& v : ic) umax = std::max(umax, std::abs(v));
  const double kmax = std::numbers::pi * static_cast<double>(ic.size()) / period;
  return umax > 0 ? 2.8 / (kmax * umax) : std::numeric_limits<double>::infinity();
}

GridField fd_solve(std::span<const std::complex<double>> ic, double period, double nu,
                   double t_end, double dt, std::span<const double> outputs,
                   const FdOptions& options) {
  const std::size_t n = ic.size();
  if (n < 4 || !std::has_single_bit(n)) throw DomainError("fd_solve grid size must be a power of two");
  if (!(period > 0)) throw DomainError("period must be positive");
  if (!(nu > 0)) throw DomainError("viscosity nu must be positive");
  if (!(dt > 0)) throw DomainError("time step must be positive");
  if (!(t_end >= 0)) throw DomainError("t_end must be non-negative");
  if (options.nonlinear && dt > fd_stable_step(ic, period)) {
    throw DomainError("dt=" + std::to_string(dt) + " exceeds the RK4 stability bound " +
                      std::to_string(fd_stable_step(ic, period)));
  }
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i] < 0 || outputs[i] > t_end) throw DomainError("output time outside [0, t_end]");
    if (i > 0 && !(outputs[i] > outputs[i - 1])) throw DomainError("output times must increase");
  }

  const FourierTransform fft(static_cast<int>(n));
  const auto k = wavenumbers(static_cast<int>(n), period);
  NonlinearTerm nonlinear{fft, std::vector<std::complex<double>>(n), options.nonlinear};
  for (std::size_t j = 0; j < n; ++j) nonlinear.ik_half[j] = std::complex<double>(0, -0.5 * k[j]);
  if (n % 2 == 0) nonlinear.ik_half[n / 2] = 0.0;

  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j) xs[j] = period * static_cast<double>(j) / static_cast<double>(n);
  GridField out(std::move(xs), std::vector<double>(outputs.begin(), outputs.end()), period);

  std::vector<std::complex<double>> modes(ic.begin(), ic.end());
  fft.forward(modes);

  double t = 0.0;
  for (std::size_t level = 0; level < outputs.size(); ++level) {
    const double span = outputs[level] - t;
    const auto steps = span > 0 ? static_cast<std::size_t>(std::ceil(span / dt - 1e-9)) : 0;
    if (steps > 0) {
      const double h = span / static_cast<double>(steps);
      std::vector<double> half(n);
      std::vector<double> full(n);
      for (std::size_t j = 0; j < n; ++j) {
        half[j] = std::exp(-nu * k[j] * k[j] * h / 2);
        full[j] = half[j] * half[j];
      }
      std::vector<std::complex<double>> stage(n);
      for (std::size_t s = 0; s < steps; ++s) {
        const auto a = nonlinear(modes);
        for (std::size_t j = 0; j < n; ++j) stage[j] = half[j] * (modes[j] + 0.5 * h * a[j]);
        const auto b = nonlinear(stage);
        for (std::size_t j = 0; j < n; ++j) stage[j] = half[j] * modes[j] + 0.5 * h * b[j];
        const auto c = nonlinear(stage);
        for (std::size_t j = 0; j < n; ++j) stage[j] = full[j] * modes[j] + h * half[j] * c[j];
        const auto d = nonlinear(stage);
        for (std::size_t j = 0; j < n; ++j) {
          modes[j] = full[j] * modes[j] +
                     h / 6.0 * (full[j] * a[j] + 2.0 * half[j] * (b[j] + c[j]) + d[j]);
        }
        const double now = t + h * static_cast<double>(s + 1);
        if (!finite(modes)) {
          throw BlowUpError("fd_solve blew up at t=" + std::to_string(now), now);
        }
      }
      t = outputs[level];
    }
    std::vector<std::complex<double>> row = modes;
    fft.inverse(row);
    std::copy(row.begin(), row.end(), out.values.begin() + level * n);
  }
  return out;
}

}  // namespace burgers::reference
