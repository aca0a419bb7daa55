#include "burgers/grid_field.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/spectral.hpp"

namespace burgers {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw DomainError("linspace needs at least one node");
  std::vector<double> v(n, lo);
  if (n == 1) return v;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

GridField periodic_grid(std::size_t nx, double period, std::vector<double> ts) {
  if (nx < 2 || period <= 0) throw DomainError("periodic grid needs nx >= 2 and period > 0");
  std::vector<double> xs(nx);
  for (std::size_t i = 0; i < nx; ++i) xs[i] = period * static_cast<double>(i) / static_cast<double>(nx);
  return GridField(std::move(xs), std::move(ts), period);
}

void validate(const GridField& field) {
  if (field.xs.empty() || field.ts.empty()) throw DomainError("grid has no nodes");
  if (field.values.size() != field.nx() * field.nt()) throw DomainError("grid value count mismatch");
  if (field.nx() > 2) {
    const double dx = field.xs[1] - field.xs[0];
    for (std::size_t i = 1; i < field.nx(); ++i) {
      const double step = field.xs[i] - field.xs[i - 1];
      if (std::abs(step - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
        throw DomainError("grid x-nodes are not uniform");
      }
    }
  }
  for (const auto& v : field.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("grid contains non-finite values");
    }
  }
}

GridField operator+(const GridField& a, const GridField& b) {
  if (!same_grid(a, b)) throw DomainError("adding fields on different grids");
  GridField sum = a;
  for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += b.values[i];
  return sum;
}

FieldSampler::FieldSampler(const GridField& field)
    : period_(field.period), x0_(field.xs.empty() ? 0.0 : field.xs.front()), time_(field.ts) {
  if (!field.periodic()) throw DomainError("FieldSampler requires a periodic field");
  const int nx = static_cast<int>(field.nx());
  FourierTransform fft(nx);
  coefficients_.resize(field.nt());
  for (std::size_t it = 0; it < field.nt(); ++it) {
    std::vector<std::complex<double>> row(field.values.begin() + it * nx,
                                          field.values.begin() + (it + 1) * nx);
    fft.forward(row);
    for (auto& c : row) c /= static_cast<double>(nx);
    coefficients_[it] = std::move(row);
  }
}

std::vector<std::complex<double>> FieldSampler::coefficients_at(double t) const {
  const auto l = time_.coefficients(t);
  std::vector<std::complex<double>> c(coefficients_.front().size(), 0.0);
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] == 0.0) continue;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += l[j] * coefficients_[j][k];
  }
  return c;
}

std::complex<double> FieldSampler::operator()(double x, double t) const {
  return evaluate_fourier(coefficients_at(t), period_, x - x0_);
}

void write_csv(const GridField& field, std::ostream& out) {
  out << "x,t,re,im\n";
  char line[128];
  for (std::size_t it = 0; it < field.nt(); ++it) {
    for (std::size_t ix = 0; ix < field.nx(); ++ix) {
      const auto v = field.at(ix, it);
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", field.xs[ix], field.ts[it],
                    v.real(), v.imag());
      out << line;
    }
  }
}

GridField read_csv(std::istream& in, double period) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,t,re,im", 0) != 0) {
    throw InputError("grid CSV must start with header x,t,re,im");
  }
  std::vector<double> xs;
  std::vector<double> ts;
  std::map<std::pair<double, double>, std::complex<double>> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x = 0, t = 0, re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &t, &re, &im) != 4) {
      throw InputError("malformed grid CSV row: " + line);
    }
    if (ts.empty() || ts.back() != t) {
      ts.push_back(t);
    }
    if (ts.size() == 1) xs.push_back(x);
    samples[{t, x}] = {re, im};
  }
  GridField field(xs, ts, period);
  for (std::size_t it = 0; it < ts.size(); ++it) {
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      auto found = samples.find({ts[it], xs[ix]});
      if (found == samples.end()) throw InputError("grid CSV is not rectangular");
      field.at(ix, it) = found->second;
    }
  }
  return field;
}

namespace {

template <class T>
void put(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw InputError("truncated binary grid");
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  }
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

constexpr char kMagic[4] = {'B', 'G', 'F', '1'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void write_binary(const GridField& field, std::ostream& out) {
  out.write(kMagic, 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, field.nx());
  put<std::uint64_t>(out, field.nt());
  put<double>(out, field.period);
  for (double x : field.xs) put(out, x);
  for (double t : field.ts) put(out, t);
  for (const auto& v : field.values) {
    put(out, v.real());
    put(out, v.imag());
  }
}

GridField read_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw InputError("not a binary grid file (bad magic)");
  }
  if (get<std::uint32_t>(in) != kVersion) throw InputError("unsupported binary grid version");
  const auto nx = get<std::uint64_t>(in);
  const auto nt = get<std::uint64_t>(in);
  const double period = get<double>(in);
  std::vector<double> xs(nx);
  std::vector<double> ts(nt);
  for (auto& x : xs) x = get<double>(in);
  for (auto& t : ts) t = get<double>(in);
  GridField field(std::move(xs), std::move(ts), period);
  for (auto& v : field.values) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    v = {re, im};
  }
  return field;
}

}  // namespace burgers
