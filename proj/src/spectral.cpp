#include "burgers/spectral.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "burgers/errors.hpp"

namespace burgers {

namespace {
// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}
}  // namespace

struct FourierTransform::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (backward != nullptr) fftw_destroy_plan(backward);
  }
};

FourierTransform::FourierTransform(int n) : n_(n), plans_(std::make_unique<Plans>()) {
  if (n < 1) throw DomainError("FFT length must be positive");
  std::vector<std::complex<double>> scratch(n);
  auto* buffer = reinterpret_cast<fftw_complex*>(scratch.data());
  std::lock_guard lock(planner_mutex());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plans_->forward = fftw_plan_dft_1d(n, buffer, buffer, FFTW_FORWARD, flags);
  plans_->backward = fftw_plan_dft_1d(n, buffer, buffer, FFTW_BACKWARD, flags);
}

FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

void FourierTransform::forward(std::span<std::complex<double>> data) const {
  if (static_cast<int>(data.size()) != n_) throw DomainError("FFT length mismatch");
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->forward, buffer, buffer);
}

void FourierTransform::inverse(std::span<std::complex<double>> data) const {
  if (static_cast<int>(data.size()) != n_) throw DomainError("FFT length mismatch");
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->backward, buffer, buffer);
  const double scale = 1.0 / n_;
  for (auto& v : data) v *= scale;
}

std::vector<double> wavenumbers(int n, double period) {
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / period;
  for (int j = 0; j < n; ++j) k[j] = base * (j <= n / 2 ? j : j - n);
  return k;
}

std::vector<std::complex<double>> spectral_derivative(std::span<const std::complex<double>> samples,
                                                      double period) {
  const int n = static_cast<int>(samples.size());
  FourierTransform fft(n);
  std::vector<std::complex<double>> work(samples.begin(), samples.end());
  fft.forward(work);
  const auto k = wavenumbers(n, period);
  for (int j = 0; j < n; ++j) {
    work[j] *= std::complex<double>(0.0, k[j]);
  }
  if (n % 2 == 0) work[n / 2] = 0.0;
  fft.inverse(work);
  return work;
}

std::complex<double> evaluate_fourier(std::span<const std::complex<double>> coefficients,
                                      double period, double x) {
  const int n = static_cast<int>(coefficients.size());
  const auto k = wavenumbers(n, period);
  std::complex<double> sum = 0.0;
  for (int j = 0; j < n; ++j) {
    if (n % 2 == 0 && j == n / 2) {
      sum += coefficients[j] * std::cos(k[j] * x);
    } else {
      sum += coefficients[j] * std::polar(1.0, k[j] * x);
    }
  }
  return sum;
}

}  // namespace burgers
