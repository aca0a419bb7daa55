#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "burgers/errors.hpp"
#include "burgers/grid_field.hpp"
#include "burgers/initial_condition.hpp"
#include "burgers/quadrature.hpp"
#include "burgers/spectral.hpp"

using namespace burgers;
using cd = std::complex<double>;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

GridField random_field(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  GridField f = periodic_grid(7 + seed % 5, kTwoPi, linspace(0.0, 1.0 + seed, 3 + seed % 4));
  for (auto& v : f.values) v = {u(rng) * std::pow(10.0, seed % 7), u(rng) * 1e-9};
  return f;
}

}  // namespace

TEST_CASE("linspace and grids") {
  const auto xs = linspace(-1.0, 1.0, 5);
  CHECK(xs == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linspace(0, 1, 0), DomainError);
  const auto g = periodic_grid(4, kTwoPi, {0.0, 1.0});
  CHECK(g.xs[1] == doctest::Approx(kTwoPi / 4));
  CHECK(g.values.size() == 8);
  CHECK_NOTHROW(validate(g));
  GridField bad = g;
  bad.values[3] = cd(std::nan(""), 0);
  CHECK_THROWS_AS(validate(bad), DomainError);
  GridField uneven({0.0, 0.1, 0.5}, {0.0});
  CHECK_THROWS_AS(validate(uneven), DomainError);
  CHECK_THROWS_AS(periodic_grid(1, kTwoPi, {0.0}), DomainError);
}

TEST_CASE("field addition") {
  auto a = periodic_grid(4, kTwoPi, {0.0});
  auto b = a;
  a.values = {1, 2, 3, 4};
  b.values = {cd(0, 1), 1, 1, 1};
  const auto c = a + b;
  CHECK(c.values[0] == cd(1, 1));
  CHECK(c.values[3] == cd(5));
  CHECK_THROWS_AS(a + periodic_grid(5, kTwoPi, {0.0}), DomainError);
}

TEST_CASE("CSV round trip") {
  for (unsigned seed = 0; seed < 8; ++seed) {
    const auto f = random_field(seed);
    std::stringstream buffer;
    write_csv(f, buffer);
    CHECK(buffer.str().rfind("x,t,re,im\n", 0) == 0);
    const auto g = read_csv(buffer, f.period);
    CHECK(g.xs == f.xs);
    CHECK(g.ts == f.ts);
    CHECK(g.values == f.values);
  }
  std::stringstream bad("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(bad), InputError);
  std::stringstream ragged("x,t,re,im\n0,0,1,0\n1,0,1,0\n0,1,1,0\n");
  CHECK_THROWS_AS(read_csv(ragged), InputError);
}

TEST_CASE("binary round trip") {
  for (unsigned seed = 0; seed < 8; ++seed) {
    const auto f = random_field(seed);
    std::stringstream buffer;
    write_binary(f, buffer);
    const std::string bytes = buffer.str();
    CHECK(bytes.substr(0, 4) == "BGF1");
    CHECK(bytes.size() == 4 + 4 + 8 + 8 + 8 + 8 * (f.nx() + f.nt()) + 16 * f.values.size());
    const auto g = read_binary(buffer);
    CHECK(g.xs == f.xs);
    CHECK(g.ts == f.ts);
    CHECK(g.values == f.values);
    CHECK(g.period == f.period);
  }
  std::stringstream junk("XXXX0000");
  CHECK_THROWS_AS(read_binary(junk), InputError);
  std::stringstream truncated(std::string("BGF1\x01\x00\x00\x00", 8));
  CHECK_THROWS_AS(read_binary(truncated), InputError);
}

TEST_CASE("field sampler interpolates in x and t") {
  const auto ts = chebyshev_lobatto(12, 2.0);
  auto f = periodic_grid(16, kTwoPi, ts);
  for (std::size_t it = 0; it < f.nt(); ++it) {
    for (std::size_t ix = 0; ix < f.nx(); ++ix) f.at(ix, it) = std::polar(std::exp(-ts[it]), 3 * f.xs[ix]);
  }
  const FieldSampler s(f);
  for (double x : {0.3, 2.9, -4.0}) {
    for (double t : {0.0, 0.77, 2.0}) CHECK(std::abs(s(x, t) - std::polar(std::exp(-t), 3 * x)) < 1e-8);
  }
}

TEST_CASE("spectral helpers") {
  const int n = 16;
  std::vector<cd> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = std::polar(1.0, 2 * kTwoPi * j / n);
  const auto d = spectral_derivative(samples, kTwoPi);
  for (int j = 0; j < n; ++j) CHECK(std::abs(d[j] - cd(0, 2) * samples[j]) < 1e-13);
  const auto k = wavenumbers(8, kTwoPi);
  CHECK(k == std::vector<double>{0, 1, 2, 3, 4, -3, -2, -1});
  FourierTransform fft(n);
  auto copy = samples;
  fft.forward(copy);
  fft.inverse(copy);
  for (int j = 0; j < n; ++j) CHECK(std::abs(copy[j] - samples[j]) < 1e-15);
}

TEST_CASE("tabulated initial conditions") {
  std::stringstream table;
  table.precision(17);
  table << "# cos sampled on [0, 2pi)\nx,re,im\n";
  for (int j = 0; j < 16; ++j) {
    const double x = kTwoPi * j / 16;
    table << x << "," << std::cos(x) << "," << 0.5 * std::sin(2 * x) << "\n";
  }
  const auto parsed = read_tabulated(table);
  CHECK(parsed.samples.size() == 16);
  CHECK(parsed.period == doctest::Approx(kTwoPi));
  const auto ic = interpolant(parsed);
  for (double x : {0.1, 1.3, 5.0, -2.0}) CHECK(std::abs(ic(x) - cd(std::cos(x), 0.5 * std::sin(2 * x))) < 1e-12);

  std::stringstream real_only("0 1\n1 2\n2 3\n3 4\n");
  CHECK(read_tabulated(real_only).samples[1] == cd(2.0));
  std::stringstream uneven("0,1\n1,1\n2.5,1\n3,1\n");
  CHECK_THROWS_AS(read_tabulated(uneven), InputError);
  std::stringstream short_table("0,1\n1,1\n");
  CHECK_THROWS_AS(read_tabulated(short_table), InputError);
  std::stringstream wide("0,1,2,3\n");
  CHECK_THROWS_AS(read_tabulated(wide), InputError);

  CHECK(named_initial_condition("exp-iz")(0.5) == std::polar(1.0, 0.5));
  CHECK(named_initial_condition("cos")(0.5) == cd(std::cos(0.5)));
  CHECK_THROWS_AS(named_initial_condition("sin"), InputError);
}
