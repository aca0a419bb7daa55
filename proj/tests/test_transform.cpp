#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "burgers/closed_form.hpp"
#include "burgers/errors.hpp"
#include "burgers/transform.hpp"
#include "oracles.hpp"

using namespace burgers;
using namespace burgers::transform;
using cd = std::complex<double>;

namespace {

SeriesTerm constant(cd c) {
  return [c](double, double) { return c; };
}

TruncatedSequence burgers_terms(int n, double nu) {
  std::vector<SeriesTerm> terms;
  for (int m = 1; m <= n; ++m) {
    terms.push_back([m, nu](double x, double t) { return closed_form::term(m, {nu, m}, {x, t}); });
  }
  return TruncatedSequence(std::move(terms));
}

}  // namespace

TEST_CASE("TruncatedSequence invariants") {
  CHECK_THROWS_AS(TruncatedSequence({}), DomainError);
  const TruncatedSequence seq({constant(1.0), constant(2.0)});
  CHECK(seq.size() == 2);
  CHECK(seq.evaluate(2, {0, 0}) == cd(2.0));
  CHECK_THROWS_AS(seq[0], DomainError);
  CHECK_THROWS_AS(seq[3], DomainError);
}

TEST_CASE("TagVariable range") {
  CHECK_NOTHROW(TagVariable(std::numbers::pi));
  CHECK_NOTHROW(TagVariable(-std::numbers::pi));
  CHECK_THROWS_AS(TagVariable(3.2), DomainError);
  CHECK_THROWS_AS(TagVariable(std::nan("")), DomainError);
}

TEST_CASE("cauchy_convolve") {
  const TruncatedSequence delta({constant(1.0), constant(0.0), constant(0.0)});
  const TruncatedSequence b({constant({2.0, 1.0}), constant(3.0), constant(4.0)});
  CHECK(cauchy_convolve(delta, b, 2, {0.1, 0.2}) == cd(2.0, 1.0));
  CHECK_THROWS_AS(cauchy_convolve(delta, b, 1, {0, 0}), DomainError);
  CHECK_THROWS_AS(cauchy_convolve(delta, b, 5, {0, 0}), DomainError);
  CHECK_NOTHROW(cauchy_convolve(delta, b, 4, {0, 0}));

  // (e^x - 1)^2 = sum_n (2^n - 2) x^n / n!; a_m = x^m / m!.
  const double x = 0.5;
  std::vector<SeriesTerm> coeff;
  for (int m = 1; m <= 6; ++m) {
    coeff.push_back([m](double xx, double) { return cd(std::pow(xx, m) / std::tgamma(m + 1.0)); });
  }
  const TruncatedSequence a(coeff);
  for (int n = 2; n <= 6; ++n) {
    const double expected = (std::pow(2.0, n) - 2) * std::pow(x, n) / std::tgamma(n + 1.0);
    CHECK(std::abs(cauchy_convolve(a, a, n, {x, 0}) - expected) < 1e-15);
  }

  // Source of the third term: f_1 d_x f_2 + f_2 d_x f_1, with d_x f_m = i m f_m.
  const double nu = 1.0;
  const EvalPoint p{0.3, 0.2};
  const TruncatedSequence f({[](double xx, double t) { return cd(oracle::f1(1.0L, xx, t)); },
                             [](double xx, double t) { return cd(oracle::f2(1.0L, xx, t)); }});
  const TruncatedSequence df({[](double xx, double t) { return cd(0, 1) * cd(oracle::f1(1.0L, xx, t)); },
                              [](double xx, double t) { return cd(0, 2) * cd(oracle::f2(1.0L, xx, t)); }});
  const auto f1 = closed_form::term(1, {nu, 3}, p);
  const auto f2 = closed_form::term(2, {nu, 3}, p);
  const cd expected = f1 * cd(0, 2) * f2 + f2 * cd(0, 1) * f1;
  CHECK(std::abs(cauchy_convolve(f, df, 3, p) - expected) < 1e-14);
}

TEST_CASE("cauchy_convolve is bilinear and symmetric") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<SeriesTerm> ta, tb;
  for (int m = 0; m < 5; ++m) {
    ta.push_back(constant({u(rng), u(rng)}));
    tb.push_back(constant({u(rng), u(rng)}));
  }
  const TruncatedSequence a(ta), b(tb);
  std::vector<SeriesTerm> tsum;
  for (int m = 0; m < 5; ++m) {
    tsum.push_back([&, m](double x, double t) { return 2.0 * ta[m](x, t) + tb[m](x, t); });
  }
  const TruncatedSequence combo(tsum);
  for (std::size_t n = 2; n <= 6; ++n) {
    const EvalPoint p{0.1, 0.1};
    CHECK(std::abs(cauchy_convolve(a, b, n, p) - cauchy_convolve(b, a, n, p)) < 1e-15);
    const cd lhs = cauchy_convolve(combo, a, n, p);
    const cd rhs = 2.0 * cauchy_convolve(a, a, n, p) + cauchy_convolve(b, a, n, p);
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }
}

TEST_CASE("tag examples") {
  CHECK(tag(TruncatedSequence({constant({0.5, -2.0})}), {0, 0}, TagVariable(0.0)) == cd(0.5, -2.0));
  const auto roots = tag(TruncatedSequence({constant(1.0), constant(1.0)}), {0, 0}, TagVariable(std::numbers::pi));
  CHECK(std::abs(roots) < 1e-15);
  const auto seq = burgers_terms(8, 0.8);
  const EvalPoint p{0.4, 0.9};
  CHECK(std::abs(tag(seq, p, TagVariable(0.0)) - closed_form::partial_sum({0.8, 8}, p)) < 1e-14);
}

TEST_CASE("untag examples and errors") {
  const cd c(1.25, -0.5);
  const TruncatedSequence single({constant(c)});
  CHECK(std::abs(untag(single, {0, 0}, 1, 4) - c) < 1e-15);
  CHECK(untag(single, {0, 0}, 2, 4) == cd(0.0));
  CHECK_THROWS_AS(untag(single, {0, 0}, 1, 3), DomainError);
  CHECK_THROWS_AS(untag(single, {0, 0}, 0, 8), DomainError);

  const auto seq = burgers_terms(5, 1.0);
  const EvalPoint p{0.7, 0.5};
  const auto expected = closed_form::term(3, {1.0, 5}, p);
  CHECK(std::abs(untag(seq, p, 3, 20) - expected) <= 1e-12);
  CHECK(std::abs(cd(oracle::f3(1.0L, 0.7L, 0.5L)) - expected) <= 1e-12);
}

TEST_CASE("untag inverts tag for every term") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<SeriesTerm> terms;
  for (int n = 1; n <= 8; ++n) {
    const cd a(u(rng), u(rng));
    const double k = 3 * u(rng), d = std::abs(u(rng));
    terms.push_back([a, k, d](double x, double t) { return a * std::polar(std::exp(-d * t), k * x); });
  }
  const TruncatedSequence seq(terms);
  for (int trial = 0; trial < 10; ++trial) {
    const EvalPoint p{6 * u(rng), 1.5 + 1.5 * u(rng)};
    for (std::size_t m = 1; m <= 8; ++m) {
      CHECK(std::abs(untag(seq, p, m, 32) - seq.evaluate(m, p)) <= 1e-12);
    }
  }
}
