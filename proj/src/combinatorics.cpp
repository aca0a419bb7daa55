#include "burgers/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "burgers/errors.hpp"

namespace burgers::combinatorics {

namespace {

void check_order(int m, int k) {
  if (m < 1 || m > kMaxOrder || k < 1 || k > m) {
    throw DomainError("Stirling index out of range: m=" + std::to_string(m) +
                      ", k=" + std::to_string(k));
  }
}

// Lower-triangular memo; rows are appended lazily and never modified after.
class StirlingTable {
 public:
  ExactInteger get(int m, int k) {
    std::lock_guard lock(mutex_);
    grow(m);
    return rows_[m][k];
  }

  ExactInteger weighted(int m) {
    std::lock_guard lock(mutex_);
    grow(m);
    while (static_cast<int>(weighted_.size()) <= m) {
      const int n = static_cast<int>(weighted_.size());
      ExactInteger sum = 0;
      ExactInteger fact = 1;  // (k-1)!
      for (int k = 1; k <= n; ++k) {
        if (k > 1) fact *= (k - 1);
        sum += fact * rows_[n][k];
      }
      weighted_.push_back(sum);
    }
    return weighted_[m];
  }

  ExactInteger alternating(int m) {
    std::lock_guard lock(mutex_);
    grow(m);
    ExactInteger sum = 0;
    ExactInteger fact = 1;
    for (int k = 1; k <= m; ++k) {
      if (k > 1) fact *= (k - 1);
      if (k % 2 == 1) {
        sum += fact * rows_[m][k];
      } else {
        sum -= fact * rows_[m][k];
      }
    }
    return sum;
  }

 private:
  void grow(int m) {
    if (rows_.empty()) rows_.push_back({ExactInteger(1)});  // {0 brace 0}
    while (static_cast<int>(rows_.size()) <= m) {
      const int n = static_cast<int>(rows_.size());
      const auto& prev = rows_.back();
      std::vector<ExactInteger> row(n + 1);
      row[0] = 0;
      for (int k = 1; k <= n; ++k) {
        ExactInteger same = k < n ? ExactInteger(k) * prev[k] : ExactInteger(0);
        row[k] = same + prev[k - 1];
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<ExactInteger>> rows_;
  std::vector<ExactInteger> weighted_{ExactInteger(0)};
};

StirlingTable& table() {
  static StirlingTable instance;
  return instance;
}

std::vector<double> binomial_row(int n) {
  std::vector<double> row(n + 1, 1.0);
  for (int j = 1; j < n; ++j) {
    row[j] = row[j - 1] * static_cast<double>(n - j + 1) / static_cast<double>(j);
  }
  return row;
}

// B[n][j] for n - j <= m - k, which is all the final value depends on.
template <class T, class Binomial>
T bell_recurrence(int m, int k, std::span<const T> xs, Binomial&& binomial) {
  const int span_width = m - k;
  std::vector<std::vector<T>> b(m + 1, std::vector<T>(k + 1, T(0)));
  b[0][0] = T(1);
  for (int j = 1; j <= k; ++j) {
    for (int n = j; n <= j + span_width && n <= m; ++n) {
      T acc(0);
      for (int i = 1; i <= n - j + 1; ++i) {
        acc += binomial(n - 1, i - 1) * xs[i - 1] * b[n - i][j - 1];
      }
      b[n][j] = acc;
    }
  }
  return b[m][k];
}

}  // namespace

ExactInteger stirling2(int m, int k) {
  check_order(m, k);
  return table().get(m, k);
}

ExactInteger weighted_stirling_sum(int m) {
  check_order(m, 1);
  return table().weighted(m);
}

ExactInteger alternating_stirling_sum(int m) {
  check_order(m, 1);
  return table().alternating(m);
}

ExactInteger factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number");
  ExactInteger value = 1;
  for (int i = 2; i <= n; ++i) value *= i;
  return value;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of negative number");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_abs(const ExactInteger& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  const ExactInteger magnitude = boost::multiprecision::abs(value);
  const auto bits = boost::multiprecision::msb(magnitude);
  if (bits < 900) return std::log(magnitude.convert_to<double>());
  const auto shift = bits - 60;
  const double head = ExactInteger(magnitude >> shift).convert_to<double>();
  return std::log(head) + static_cast<double>(shift) * std::log(2.0);
}

std::complex<double> bell_partial(int m, int k, const BellArguments& xs) {
  if (m < 1 || k < 1 || k > m) {
    throw DomainError("bell_partial requires 1 <= k <= m");
  }
  if (xs.size() != static_cast<std::size_t>(m - k + 1)) {
    throw DomainError("bell_partial: expected " + std::to_string(m - k + 1) +
                      " arguments, got " + std::to_string(xs.size()));
  }
  std::vector<std::vector<double>> pascal;
  pascal.reserve(m);
  for (int n = 0; n < m; ++n) pascal.push_back(binomial_row(n));
  return bell_recurrence<std::complex<double>>(
      m, k, xs.values(),
      [&](int n, int j) { return std::complex<double>(pascal[n][j], 0.0); });
}

ExactInteger bell_partial_exact(int m, int k, std::span<const ExactInteger> xs) {
  if (m < 1 || k < 1 || k > m) {
    throw DomainError("bell_partial_exact requires 1 <= k <= m");
  }
  if (xs.size() != static_cast<std::size_t>(m - k + 1)) {
    throw DomainError("bell_partial_exact: expected " + std::to_string(m - k + 1) +
                      " arguments, got " + std::to_string(xs.size()));
  }
  std::vector<std::vector<ExactInteger>> pascal(m);
  for (int n = 0; n < m; ++n) {
    pascal[n].assign(n + 1, ExactInteger(1));
    for (int j = 1; j < n; ++j) pascal[n][j] = pascal[n - 1][j - 1] + pascal[n - 1][j];
  }
  return bell_recurrence<ExactInteger>(m, k, xs,
                                       [&](int n, int j) { return pascal[n][j]; });
}

}  // namespace burgers::combinatorics
