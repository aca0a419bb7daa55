#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <thread>
#include <vector>

#include "burgers/combinatorics.hpp"
#include "burgers/errors.hpp"
#include "oracles.hpp"

using namespace burgers;
using namespace burgers::combinatorics;

namespace {

BellArguments args(std::vector<std::complex<double>> xs) { return BellArguments(std::move(xs)); }

}  // namespace

TEST_CASE("stirling2 matches partition enumeration") {
  CHECK(stirling2(5, 1) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  for (int m = 1; m <= 10; ++m) {
    for (int k = 1; k <= m; ++k) {
      CHECK(stirling2(m, k) == oracle::count_partitions(m, k));
    }
  }
}

TEST_CASE("stirling2 row sums are Bell numbers") {
  // Enumeration for small m, then the Bell triangle (an independent recurrence).
  std::vector<ExactInteger> row{1};
  std::vector<ExactInteger> bell{1};
  for (int n = 1; n <= 15; ++n) {
    std::vector<ExactInteger> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  for (int m = 1; m <= 15; ++m) {
    ExactInteger sum = 0;
    for (int k = 1; k <= m; ++k) sum += stirling2(m, k);
    CHECK(sum == bell[m]);
    if (m <= 10) CHECK(sum == oracle::bell_number(m));
  }
}

TEST_CASE("stirling2 range checks") {
  CHECK_THROWS_AS(stirling2(0, 1), DomainError);
  CHECK_THROWS_AS(stirling2(3, 0), DomainError);
  CHECK_THROWS_AS(stirling2(3, 4), DomainError);
  CHECK_THROWS_AS(stirling2(kMaxOrder + 1, 1), DomainError);
  CHECK(stirling2(kMaxOrder, kMaxOrder) == 1);
  CHECK(stirling2(kMaxOrder, 1) == 1);
}

TEST_CASE("weighted and alternating Stirling sums") {
  CHECK(weighted_stirling_sum(1) == 1);
  CHECK(weighted_stirling_sum(3) == 6);
  CHECK(weighted_stirling_sum(5) == 150);
  for (int m = 2; m < 60; ++m) {
    const auto s = weighted_stirling_sum(m);
    const auto next = weighted_stirling_sum(m + 1);
    CHECK(next > s);
    CHECK(next > s * m);
  }
  CHECK(alternating_stirling_sum(1) == 1);
  for (int m = 2; m <= 20; ++m) {
    ExactInteger direct = 0;
    for (int k = 1; k <= m; ++k) {
      const ExactInteger w = factorial(k - 1) * stirling2(m, k);
      direct += (k % 2 == 1) ? w : ExactInteger(-w);
    }
    CHECK(direct == 0);
    CHECK(alternating_stirling_sum(m) == 0);
  }
  CHECK_THROWS_AS(weighted_stirling_sum(0), DomainError);
  CHECK_THROWS_AS(weighted_stirling_sum(kMaxOrder + 1), DomainError);
}

TEST_CASE("factorials") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  ExactInteger f40 = 1;
  for (int i = 2; i <= 40; ++i) f40 *= i;
  CHECK(factorial(40) == f40);
  CHECK(std::abs(log_factorial(40) - log_abs(f40)) < 1e-12 * log_abs(f40));
  CHECK(std::abs(log_factorial(300) - log_abs(factorial(300))) < 1e-12 * log_factorial(300));
  CHECK(std::isinf(log_abs(ExactInteger(0))));
  CHECK(log_abs(ExactInteger(-8)) == doctest::Approx(std::log(8.0)));
}

TEST_CASE("bell_partial examples") {
  CHECK(bell_partial(2, 2, args({{1.0, 0.0}})) == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(bell_partial(3, 2, args({2.0, 5.0})) - 30.0) < 1e-14);
  CHECK_THROWS_AS(bell_partial(3, 2, args({2.0})), DomainError);
  CHECK_THROWS_AS(bell_partial(3, 2, args({2.0, 5.0, 1.0})), DomainError);
}

TEST_CASE("bell_partial at unit arguments gives Stirling numbers") {
  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= m; ++k) {
      const std::vector<std::complex<double>> ones(m - k + 1, 1.0);
      const auto v = bell_partial(m, k, BellArguments(ones));
      CHECK(v.real() == doctest::Approx(stirling2(m, k).convert_to<double>()).epsilon(1e-13));
      CHECK(v.imag() == 0.0);
      const std::vector<ExactInteger> exact_ones(m - k + 1, 1);
      CHECK(bell_partial_exact(m, k, exact_ones) == stirling2(m, k));
    }
  }
}

TEST_CASE("bell_partial agrees with partition enumeration") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int m = 1; m <= 8; ++m) {
    for (int k = 1; k <= m; ++k) {
      std::vector<std::complex<double>> xs(m - k + 2);
      for (auto& x : xs) x = {u(rng), u(rng)};
      const auto expected = oracle::bell_by_partitions(m, k, xs);
      const auto got = bell_partial(m, k, BellArguments(std::vector<std::complex<double>>(xs.begin() + 1, xs.end())));
      CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("concurrent table construction is consistent") {
  std::vector<ExactInteger> results(4);
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] { results[w] = weighted_stirling_sum(200 + w); });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 4; ++w) CHECK(results[w] == weighted_stirling_sum(200 + w));
}
