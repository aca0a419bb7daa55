#include "burgers/initial_condition.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <memory>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/spectral.hpp"

namespace burgers {

namespace {

std::vector<double> parse_numbers(std::string line) {
  std::replace(line.begin(), line.end(), ',', ' ');
  std::istringstream fields(line);
  std::vector<double> values;
  std::string token;
  while (fields >> token) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      return {};
    }
    if (used != token.size()) return {};
    values.push_back(v);
  }
  return values;
}

}  // namespace

TabulatedInitialCondition read_tabulated(std::istream& in) {
  std::vector<double> xs;
  std::vector<std::complex<double>> samples;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    const auto values = parse_numbers(line);
    if (values.empty() && xs.empty()) continue;  // header
    if (values.size() != 2 && values.size() != 3) {
      throw InputError("initial condition table line " + std::to_string(line_number) +
                       ": expected x,re[,im]");
    }
    xs.push_back(values[0]);
    samples.emplace_back(values[1], values.size() == 3 ? values[2] : 0.0);
    if (!std::isfinite(values[0]) || !std::isfinite(samples.back().real()) ||
        !std::isfinite(samples.back().imag())) {
      throw InputError("initial condition table line " + std::to_string(line_number) +
                       ": non-finite value");
    }
  }
  if (xs.size() < 4) throw InputError("initial condition table needs at least 4 samples");
  const double dx = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  if (!(dx > 0)) throw InputError("initial condition x values must increase");
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (std::abs(xs[j] - xs[j - 1] - dx) > 1e-3 * dx) {
      throw InputError("initial condition x values must be uniformly spaced");
    }
  }
  return {xs.front(), dx * static_cast<double>(xs.size()), std::move(samples)};
}

greens::InitialCondition interpolant(const TabulatedInitialCondition& table) {
  if (table.samples.empty() || !(table.period > 0)) throw InputError("empty initial condition table");
  auto coefficients = std::make_shared<std::vector<std::complex<double>>>(table.samples);
  FourierTransform fft(static_cast<int>(coefficients->size()));
  fft.forward(*coefficients);
  const double n = static_cast<double>(coefficients->size());
  for (auto& c : *coefficients) c /= n;
  const double period = table.period;
  const double x0 = table.x0;
  return [coefficients, period, x0](double x) { return evaluate_fourier(*coefficients, period, x - x0); };
}

greens::InitialCondition named_initial_condition(const std::string& name) {
  if (name == "exp-iz") return [](double x) { return std::polar(1.0, x); };
  if (name == "cos") return [](double x) { return std::complex<double>(std::cos(x), 0.0); };
  throw InputError("unknown initial condition '" + name + "' (expected exp-iz, cos or a file)");
}

}  // namespace burgers
