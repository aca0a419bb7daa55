#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace burgers {

/// In-place complex FFT of fixed length (FFTW backed). Forward uses
/// exp(-i k x); inverse applies the 1/n normalization. Safe to share between
/// threads once constructed.
class FourierTransform {
 public:
  explicit FourierTransform(int n);
  ~FourierTransform();
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  int size() const noexcept { return n_; }
  void forward(std::span<std::complex<double>> data) const;
  void inverse(std::span<std::complex<double>> data) const;

 private:
  struct Plans;
  int n_;
  std::unique_ptr<Plans> plans_;
};

/// Angular wavenumbers in FFT order for n samples over one period.
/// The Nyquist entry (n even) carries +n/2 * 2pi/period.
std::vector<double> wavenumbers(int n, double period);

/// Spectral x-derivative of periodic samples; the Nyquist mode is dropped.
std::vector<std::complex<double>> spectral_derivative(std::span<const std::complex<double>> samples,
                                                      double period);

/// Trigonometric interpolant at x from normalized coefficients (FFT / n).
std::complex<double> evaluate_fourier(std::span<const std::complex<double>> coefficients,
                                      double period, double x);

}  // namespace burgers
