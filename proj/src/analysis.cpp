#include "burgers/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "burgers/closed_form.hpp"
#include "burgers/combinatorics.hpp"
#include "burgers/errors.hpp"
#include "burgers/parallel.hpp"

namespace burgers::analysis {

namespace {

constexpr long double kBlowUp = 1e10L;

bool finite(const std::complex<long double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

struct CellErrors {
  std::vector<double> error;  // per N, 1-based storage at [N-1]
  std::vector<bool> flagged;
};

// sup_n |U_ref - U_N| for N = 1..N_max over all domain nodes.
CellErrors errors_against(const ReferenceField& ref, double nu, int N_max, const DomainSpec& dom) {
  const auto xs = x_nodes(dom);
  const auto ts = t_nodes(dom);
  const std::size_t nx = xs.size();

  std::vector<std::vector<double>> level_error(ts.size(), std::vector<double>(N_max, 0.0));
  std::vector<std::vector<char>> level_flag(ts.size(), std::vector<char>(N_max, 0));

  parallel_for(ts.size(), [&](std::size_t it) {
    const auto c = closed_form::term_amplitudes<long double>(N_max, nu, ts[it]);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const auto u_ref = ref.values.at(ix, it);
      const bool ref_ok = finite(u_ref);
      std::complex<long double> sum = 0;
      for (int m = 1; m <= N_max; ++m) {
        sum += c[m - 1] * std::polar(1.0L, static_cast<long double>(m) * static_cast<long double>(xs[ix]));
        if (!ref_ok || !finite(sum) || std::abs(sum) > kBlowUp) {
          level_flag[it][m - 1] = 1;
          if (!ref_ok || !finite(sum)) continue;
        }
        const double e = static_cast<double>(std::abs(u_ref - sum));
        level_error[it][m - 1] = std::max(level_error[it][m - 1], e);
      }
    }
  });

  CellErrors out{std::vector<double>(N_max, 0.0), std::vector<bool>(N_max, !ref.failed.empty())};
  for (std::size_t it = 0; it < ts.size(); ++it) {
    for (int m = 0; m < N_max; ++m) {
      out.error[m] = std::max(out.error[m], level_error[it][m]);
      if (level_flag[it][m]) out.flagged[m] = true;
    }
  }
  return out;
}

}  // namespace

void validate(const DomainSpec& dom) {
  if (!(dom.x_min < dom.x_max)) throw DomainError("domain needs x_min < x_max");
  if (!(dom.t_min >= 0 && dom.t_min <= dom.t_max)) throw DomainError("domain needs 0 <= t_min <= t_max");
  if (dom.nx < 1 || dom.nt < 1) throw DomainError("domain needs at least one node per axis");
}

std::vector<double> x_nodes(const DomainSpec& dom) { return linspace(dom.x_min, dom.x_max, dom.nx); }

std::vector<double> t_nodes(const DomainSpec& dom) {
  if (dom.t_min == dom.t_max) return std::vector<double>(dom.nt, dom.t_min);
  return linspace(dom.t_min, dom.t_max, dom.nt);
}

template <class Real>
double sup_error(const BasicGridField<Real>& a, const BasicGridField<Real>& b) {
  if (!same_grid(a, b)) throw DomainError("sup_error needs identical grids");
  Real worst = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return static_cast<double>(worst);
}

template double sup_error<double>(const GridField&, const GridField&);
template double sup_error<long double>(const ExtendedGridField&, const ExtendedGridField&);

ReferenceField cole_hopf_field(double nu, const DomainSpec& dom, const reference::ColeHopfSpec& spec) {
  validate(dom);
  ReferenceField ref{ExtendedGridField(std::vector<long double>(), std::vector<long double>()), {}};
  const auto xs = x_nodes(dom);
  const auto ts = t_nodes(dom);
  ref.values = ExtendedGridField(std::vector<long double>(xs.begin(), xs.end()),
                                 std::vector<long double>(ts.begin(), ts.end()));
  const std::size_t nx = xs.size();
  std::vector<char> failed(nx * ts.size(), 0);
  parallel_for(nx * ts.size(), [&](std::size_t node) {
    const std::size_t ix = node % nx;
    const std::size_t it = node / nx;
    const long double x = xs[ix];
    const long double t = ts[it];
    if (t == 0) {
      ref.values.at(ix, it) = std::polar(1.0L, x);
      return;
    }
    try {
      ref.values.at(ix, it) = reference::cole_hopf<long double>(nu, x, t, spec);
    } catch (const NearSingularError&) {
      failed[node] = 1;
    } catch (const AccuracyError&) {
      failed[node] = 1;
    }
  });
  constexpr long double nan = std::numeric_limits<long double>::quiet_NaN();
  for (std::size_t node = 0; node < failed.size(); ++node) {
    if (failed[node]) {
      ref.failed.push_back(node);
      ref.values.values[node] = {nan, nan};
    }
  }
  return ref;
}

ExtendedGridField closed_form_field(double nu, int N, const DomainSpec& dom) {
  validate(dom);
  closed_form::validate({nu, N});
  const auto xs = x_nodes(dom);
  const auto ts = t_nodes(dom);
  ExtendedGridField field(std::vector<long double>(xs.begin(), xs.end()),
                          std::vector<long double>(ts.begin(), ts.end()));
  parallel_for(ts.size(), [&](std::size_t it) {
    const auto c = closed_form::term_amplitudes<long double>(N, nu, ts[it]);
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      std::complex<long double> sum = 0;
      for (int m = 1; m <= N; ++m) {
        sum += c[m - 1] * std::polar(1.0L, static_cast<long double>(m) * static_cast<long double>(xs[ix]));
      }
      field.at(ix, it) = sum;
    }
  });
  return field;
}

std::vector<ErrorRecord> sweep_N(double nu, int N_max, const DomainSpec& dom) {
  closed_form::validate({nu, N_max});
  validate(dom);
  const auto ref = cole_hopf_field(nu, dom);
  if (!ref.failed.empty()) {
    const auto xs = x_nodes(dom);
    const auto ts = t_nodes(dom);
    const std::size_t node = ref.failed.front();
    const double x = xs[node % xs.size()];
    const double t = ts[node / xs.size()];
    throw AccuracyError("Cole-Hopf reference failed at x=" + std::to_string(x) +
                            ", t=" + std::to_string(t),
                        std::numeric_limits<double>::infinity(), x, t);
  }
  const auto cells = errors_against(ref, nu, N_max, dom);
  std::vector<ErrorRecord> records;
  for (int N = 1; N <= N_max; ++N) {
    records.push_back({N, nu, cells.error[N - 1], static_cast<bool>(cells.flagged[N - 1])});
  }
  return records;
}

std::vector<ErrorRecord> sweep_nu(std::span<const int> N_list, std::span<const double> nu_grid,
                                  const DomainSpec& dom) {
  validate(dom);
  if (N_list.empty()) throw DomainError("sweep_nu needs at least one N");
  for (int N : N_list) {
    if (N < 1) throw DomainError("truncation orders must be positive");
  }
  for (double nu : nu_grid) {
    if (!(nu > 0)) throw DomainError("viscosities must be positive");
  }
  const int N_max = *std::max_element(N_list.begin(), N_list.end());
  std::vector<ErrorRecord> records;
  for (double nu : nu_grid) {
    const auto ref = cole_hopf_field(nu, dom);
    const auto cells = errors_against(ref, nu, N_max, dom);
    for (int N : N_list) {
      records.push_back({N, nu, cells.error[N - 1], static_cast<bool>(cells.flagged[N - 1])});
    }
  }
  return records;
}

std::vector<RatioEstimate> estimate_r(int m_max) {
  if (m_max < 2 || m_max > 300) throw DomainError("estimate_r needs 2 <= m_max <= 300");
  using boost::multiprecision::cpp_rational;
  std::vector<RatioEstimate> out;
  out.reserve(m_max);
  auto current = combinatorics::weighted_stirling_sum(1);
  for (int m = 1; m <= m_max; ++m) {
    const auto next = combinatorics::weighted_stirling_sum(m + 1);
    const cpp_rational ratio(next, current * m);
    out.push_back({m, ratio.convert_to<double>()});
    current = next;
  }
  return out;
}

double richardson_limit(std::span<const RatioEstimate> ratios) {
  if (ratios.empty()) throw DomainError("no ratios to extrapolate");
  const int m_max = ratios.back().m;
  std::vector<int> ms;
  for (int divisor : {4, 2, 1}) {
    const int m = m_max / divisor;
    if (m >= 1 && (ms.empty() || m > ms.back())) ms.push_back(m);
  }
  std::vector<double> h;
  std::vector<double> p;
  for (int m : ms) {
    auto it = std::find_if(ratios.begin(), ratios.end(), [m](const auto& r) { return r.m == m; });
    if (it == ratios.end()) throw DomainError("ratio table is missing m=" + std::to_string(m));
    h.push_back(1.0 / m);
    p.push_back(it->r);
  }
  // Neville's scheme evaluated at h = 0.
  for (std::size_t level = 1; level < p.size(); ++level) {
    for (std::size_t i = p.size() - 1; i >= level; --i) {
      p[i] = (h[i - level] * p[i] - h[i] * p[i - 1]) / (h[i - level] - h[i]);
      if (i == level) break;
    }
  }
  return p.back();
}

double convergence_threshold(double r) {
  if (!(r > 0)) throw DomainError("ratio constant must be positive");
  return r / 2.0;
}

LinearFit fit_log_error(std::span<const ErrorRecord> records) {
  if (records.size() < 2) throw DomainError("a fit needs at least two records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(records.size());
  std::vector<double> ys;
  for (const auto& r : records) {
    if (!(r.sup_error > 0) || !std::isfinite(r.sup_error)) {
      throw DomainError("log fit needs positive finite errors");
    }
    const double x = r.N;
    const double y = std::log(r.sup_error);
    ys.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  const double mean = sy / n;
  double ss_tot = 0, ss_res = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double predicted = fit.intercept + fit.slope * records[i].N;
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::optional<double> upturn_onset(std::span<const ErrorRecord> records, int N, double level) {
  std::optional<double> onset;
  for (const auto& r : records) {
    if (r.N != N) continue;
    if (r.flagged || r.sup_error >= level) {
      if (!onset || r.nu > *onset) onset = r.nu;
    }
  }
  return onset;
}

}  // namespace burgers::analysis
