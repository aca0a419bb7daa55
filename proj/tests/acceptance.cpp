// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burgers/analysis.hpp"
#include "burgers/closed_form.hpp"
#include "burgers/combinatorics.hpp"
#include "burgers/greens.hpp"
#include "burgers/reference.hpp"
#include "burgers/transform.hpp"
#include "oracles.hpp"

using namespace burgers;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, pattern, a, b, c, d);
  return buffer;
}

Outcome closed_form_fidelity() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ux(-2 * kPi, 2 * kPi), ut(0.0, 3.0);
  double worst = 0;
  for (double nu : {0.3, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const double x = ux(rng), t = ut(rng);
      const std::complex<long double> expected[] = {oracle::f1(nu, x, t), oracle::f2(nu, x, t), oracle::f3(nu, x, t)};
      for (int m = 1; m <= 3; ++m) {
        const cd got = closed_form::term(m, {nu, m}, {x, t});
        const auto e = expected[m - 1];
        const long double err = std::abs(std::complex<long double>(got.real(), got.imag()) - e) / std::abs(e);
        worst = std::max(worst, static_cast<double>(err));
      }
    }
  }
  return {worst <= 1e-12, fmt("max relative error %.2e over 600 evaluations", worst)};
}

Outcome vanishing_at_zero() {
  bool exact = true;
  for (int m = 2; m <= 20; ++m) {
    exact = exact && combinatorics::alternating_stirling_sum(m) == 0;
    for (double x : {-5.0, 0.0, 1.3}) exact = exact && closed_form::term(m, {0.3, m}, {x, 0.0}) == cd(0.0);
  }
  double worst = 0;
  for (int N = 1; N <= 30; ++N) {
    for (double x : {-2 * kPi, -1.0, 0.0, 0.7, 2 * kPi}) {
      worst = std::max(worst, std::abs(closed_form::partial_sum({0.3, N}, {x, 0.0}) - std::polar(1.0, x)));
    }
  }
  return {exact && worst <= 1e-14,
          std::string(exact ? "terms 2..20 exactly zero" : "a term is non-zero") +
              fmt(", max |U_N - e^{ix}| = %.2e", worst)};
}

Outcome recursion_residual() {
  double worst = 0;
  for (int m = 1; m <= 10; ++m) {
    for (int ix = 0; ix < 20; ++ix) {
      for (int it = 0; it < 10; ++it) {
        const EvalPoint p{-2 * kPi + 4 * kPi * ix / 19, 3.0 * it / 9};
        worst = std::max(worst, std::abs(closed_form::recursion_residual(m, {1.0, m}, p, 1e-4)));
      }
    }
  }
  return {worst <= 1e-6, fmt("max residual %.2e", worst)};
}

Outcome greens_oracle() {
  const auto grid = greens::default_grid();
  const auto result = greens::recurse([](double x) { return std::polar(1.0, x); }, 1.0, grid, 3);
  double worst = 0;
  for (int m = 2; m <= 3; ++m) {
    const auto& f = result.terms[m - 1];
    for (std::size_t it = 0; it < grid.nt(); ++it) {
      for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
        worst = std::max(worst, std::abs(f.at(ix, it) - closed_form::term(m, {1.0, m}, {grid.xs[ix], grid.ts[it]})));
      }
    }
  }
  return {worst <= 1e-5, fmt("max |f_m - closed form| for m=2,3: %.2e", worst)};
}

Outcome oracle_triangle() {
  // fd_solve runs on one period [0, 2pi); Lambda = [-2pi, 2pi] is covered by
  // comparing at every node x and its image x - 2pi.
  constexpr std::size_t nx = 128;
  std::vector<double> ts;
  for (int i = 0; i < 30; ++i) ts.push_back(0.1 + 2.9 * i / 29);
  double worst_cf_ch = 0, worst_cf_fd = 0, worst_ch_fd = 0;
  for (double nu : {0.75, 1.0}) {
    std::vector<cd> ic(nx);
    for (std::size_t j = 0; j < nx; ++j) ic[j] = std::polar(1.0, 2 * kPi * j / nx);
    const double dt = 0.5 * reference::fd_stable_step(ic, 2 * kPi);
    const auto fd = reference::fd_solve(ic, 2 * kPi, nu, 3.0, dt, ts);
    for (std::size_t it = 0; it < ts.size(); ++it) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        for (double shift : {0.0, -2 * kPi}) {
          const double x = fd.xs[ix] + shift;
          const cd cf = closed_form::partial_sum({nu, 25}, {x, ts[it]});
          const cd ch = reference::cole_hopf(nu, x, ts[it]);
          const cd f = fd.at(ix, it);
          worst_cf_ch = std::max(worst_cf_ch, std::abs(cf - ch));
          worst_cf_fd = std::max(worst_cf_fd, std::abs(cf - f));
          worst_ch_fd = std::max(worst_ch_fd, std::abs(ch - f));
        }
      }
    }
  }
  const double worst = std::max({worst_cf_ch, worst_cf_fd, worst_ch_fd});
  return {worst <= 1e-5, fmt("closed/Cole-Hopf %.2e, closed/fd %.2e, Cole-Hopf/fd %.2e", worst_cf_ch,
                             worst_cf_fd, worst_ch_fd)};
}

Outcome error_vs_N() {
  bool ok = true;
  std::string detail;
  double slope_half = 0, slope_one = 0;
  for (double nu : {0.5, 0.75, 1.0}) {
    const auto records = analysis::sweep_N(nu, 25);
    bool monotone = true;
    for (std::size_t i = 1; i < records.size(); ++i) monotone = monotone && records[i].sup_error < records[i - 1].sup_error;
    const auto fit = analysis::fit_log_error(records);
    ok = ok && monotone && fit.r_squared >= 0.95;
    if (nu == 0.5) slope_half = fit.slope;
    if (nu == 1.0) slope_one = fit.slope;
    detail += fmt("nu=%.2f slope %.3f R2 %.5f", nu, fit.slope, fit.r_squared) + (monotone ? "; " : " NOT monotone; ");
  }
  ok = ok && slope_one < slope_half;
  return {ok, detail + (slope_one < slope_half ? "nu=1 steeper than nu=0.5" : "nu=1 NOT steeper")};
}

Outcome error_vs_nu() {
  const std::vector<int> Ns{10, 20, 30};
  std::vector<double> nus;
  for (int i = 0; i <= 16; ++i) nus.push_back(0.2 + 0.05 * i);
  const auto records = analysis::sweep_nu(Ns, nus);
  auto error_at = [&](int N, double nu) {
    for (const auto& r : records) {
      if (r.N == N && std::abs(r.nu - nu) < 1e-12) return r.sup_error;
    }
    return std::nan("");
  };
  const double ratio = error_at(20, 0.2) / error_at(20, 0.3);
  bool ok = ratio >= 1e3;
  std::string detail = fmt("N=20 error ratio nu=0.20/0.30 = %.2e; onset", ratio);
  for (int N : Ns) {
    const auto onset = analysis::upturn_onset(records, N);
    const bool inside = onset && *onset >= 0.2 - 1e-12 && *onset <= 0.28 + 1e-12;
    ok = ok && inside;
    detail += fmt(" N=%.0f:%.2f", N, onset.value_or(std::nan("")));
  }
  return {ok, detail};
}

Outcome ratio_constant() {
  const auto r = analysis::estimate_r(200);
  const double r200 = r.back().r;
  const double limit = analysis::richardson_limit(r);
  const double paper = 1.4427;
  // Brute-force Stirling sums S(2..5) by set-partition enumeration.
  auto brute = [](int m) {
    std::uint64_t s = 0, fact = 1;
    for (int k = 1; k <= m; ++k) {
      if (k > 1) fact *= (k - 1);
      s += fact * oracle::count_partitions(m, k);
    }
    return s;
  };
  using boost::multiprecision::cpp_rational;
  using combinatorics::ExactInteger;
  const cpp_rational r2(ExactInteger(brute(3)), ExactInteger(2 * brute(2)));
  const cpp_rational r4(ExactInteger(brute(5)), ExactInteger(4 * brute(4)));
  const cpp_rational lib2(combinatorics::weighted_stirling_sum(3), combinatorics::weighted_stirling_sum(2) * 2);
  const cpp_rational lib4(combinatorics::weighted_stirling_sum(5), combinatorics::weighted_stirling_sum(4) * 4);
  const bool exact = r2 == cpp_rational(3, 2) && r4 == cpp_rational(150, 104) && lib2 == r2 && lib4 == r4 &&
                     r[1].r == 1.5 && r[3].r == r4.convert_to<double>();
  const double e200 = std::abs(r200 - paper) / paper;
  const double elim = std::abs(limit - paper) / paper;
  return {exact && e200 <= 0.01 && elim <= 0.001,
          fmt("r_200 = %.10f (rel %.1e), Richardson %.10f (rel %.1e)", r200, e200, limit, elim) +
              (exact ? ", r_2 = 3/2 and r_4 = 150/104 exact" : ", exact ratios MISMATCH")};
}

Outcome transform_identity() {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<transform::SeriesTerm> terms;
  for (int n = 1; n <= 8; ++n) {
    const cd a(u(rng), u(rng));
    const double k = 4 * u(rng), d = std::abs(u(rng));
    terms.push_back([a, k, d](double x, double t) { return a * std::polar(std::exp(-d * t), k * x); });
  }
  const transform::TruncatedSequence seq(terms);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const EvalPoint p{2 * kPi * u(rng), 1.5 + 1.5 * u(rng)};
    for (std::size_t m = 1; m <= 8; ++m) {
      worst = std::max(worst, std::abs(transform::untag(seq, p, m, 32) - seq.evaluate(m, p)));
    }
  }
  return {worst <= 1e-12, fmt("max |untag(tag) - f_m| = %.2e", worst)};
}

Outcome conservation() {
  constexpr int M = 64;
  double worst_closed = 0;
  for (double nu : {0.3, 1.0}) {
    for (int N = 1; N <= 30; ++N) {
      for (double t : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
        cd mean = 0;
        for (int j = 0; j < M; ++j) mean += closed_form::partial_sum({nu, N}, {2 * kPi * j / M, t});
        worst_closed = std::max(worst_closed, std::abs(mean) / M);
      }
    }
  }
  std::vector<cd> ic(M);
  for (int j = 0; j < M; ++j) ic[j] = std::polar(1.0, 2 * kPi * j / M);
  std::vector<double> ts;
  for (int i = 1; i <= 8; ++i) ts.push_back(0.5 * i);
  const auto fd = reference::fd_solve(ic, 2 * kPi, 1.0, 4.0, 0.01, ts);
  double worst_fd = 0;
  for (std::size_t it = 0; it < fd.nt(); ++it) {
    cd mean = 0;
    for (std::size_t ix = 0; ix < fd.nx(); ++ix) mean += fd.at(ix, it);
    worst_fd = std::max(worst_fd, std::abs(mean) / M);
  }
  return {worst_closed <= 1e-12 && worst_fd <= 1e-10,
          fmt("closed-form mean %.2e, fd mean %.2e", worst_closed, worst_fd)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed-form fidelity", 1.0, closed_form_fidelity},
      {2, "vanishing higher terms at t=0", 0.0, vanishing_at_zero},
      {3, "recursion residual", 0.0, recursion_residual},
      {4, "Green's engine vs closed form", 30.0, greens_oracle},
      {5, "oracle triangle", 120.0, oracle_triangle},
      {6, "error decay in N", 0.0, error_vs_N},
      {7, "error upturn in nu", 0.0, error_vs_nu},
      {8, "ratio constant", 10.0, ratio_constant},
      {9, "transform identity", 0.0, transform_identity},
      {10, "conservation", 0.0, conservation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    std::string timing = fmt("%.2f s", seconds);
    if (c.time_limit > 0) {
      timing += fmt(" (limit %.0f s)", c.time_limit);
      if (seconds > c.time_limit) pass = false;
    }
    if (!pass) ++failures;
    std::printf("%s [%d] %s: %s; %s\n", pass ? "PASS" : "FAIL", c.id, c.name, outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
