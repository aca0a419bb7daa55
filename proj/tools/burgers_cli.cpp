// burgers: command-line front end for the series solver and its oracles.
//
// Exit status: 0 success, 2 invalid input or usage, 3 accuracy failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burgers/analysis.hpp"
#include "burgers/closed_form.hpp"
#include "burgers/errors.hpp"
#include "burgers/greens.hpp"
#include "burgers/grid_field.hpp"
#include "burgers/initial_condition.hpp"
#include "burgers/parallel.hpp"
#include "burgers/reference.hpp"
#include "burgers/report.hpp"

namespace {

using namespace burgers;
constexpr double kPi = std::numbers::pi;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kAccuracy = 3;

struct Output {
  std::string path;
  std::string format = "csv";
  std::string svg;

  report::Format kind() const { return format == "json" ? report::Format::Json : report::Format::Csv; }
};

// Destination stream: --output, else $BURGERS_OUTPUT_DIR/<default_name>, else stdout.
class Sink {
 public:
  Sink(const Output& out, const std::string& default_name) {
    std::string path = out.path;
    if (path.empty() && !default_name.empty()) {
      if (const char* dir = std::getenv("BURGERS_OUTPUT_DIR"); dir && *dir) {
        std::filesystem::create_directories(dir);
        auto name = default_name;
        if (out.format == "json") name = std::filesystem::path(name).replace_extension(".json").string();
        path = (std::filesystem::path(dir) / name).string();
      }
    }
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open output file " + path);
      path_ = path;
    }
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }
  bool to_file() const { return static_cast<bool>(file_); }
  const std::string& path() const { return path_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--output", out.path, "Output file (default: stdout, or $BURGERS_OUTPUT_DIR)");
  cmd->add_option("--format", out.format, "Table format")->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void write_svg(const std::string& path, const std::string& svg) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw InputError("cannot open SVG file " + path);
  file << svg;
}

std::string complex_text(std::complex<double> v) {
  const auto re = report::format_number(v.real());
  const auto im = report::format_number(std::abs(v.imag()));
  return re + (std::signbit(v.imag()) ? "-" : "+") + im + "i";
}

struct DomainOptions {
  analysis::DomainSpec dom;
  void add(CLI::App* cmd) {
    cmd->add_option("--x-min", dom.x_min, "Domain left end")->capture_default_str();
    cmd->add_option("--x-max", dom.x_max, "Domain right end")->capture_default_str();
    cmd->add_option("--t-min", dom.t_min, "Domain start time")->capture_default_str();
    cmd->add_option("--t-max", dom.t_max, "Domain end time")->capture_default_str();
    cmd->add_option("--nx", dom.nx, "x nodes")->capture_default_str();
    cmd->add_option("--nt", dom.nt, "t nodes")->capture_default_str();
  }
};

// Profiles of U_N on a uniform x grid at the requested times.
GridField solve_field(double nu, int N, double x_min, double x_max, std::size_t nx,
                      const std::vector<double>& ts) {
  closed_form::SolverConfig cfg{nu, N};
  closed_form::validate(cfg);
  for (double t : ts) validate(EvalPoint{0.0, t});
  GridField field(linspace(x_min, x_max, nx), ts);
  parallel_for(ts.size(), [&](std::size_t it) {
    for (std::size_t ix = 0; ix < nx; ++ix) field.at(ix, it) = closed_form::partial_sum(cfg, {field.xs[ix], ts[it]});
  });
  return field;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequence-transformation series solver for the Burgers equation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values (sections per subcommand)");
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (0 = all cores)");
  Output out;

  // term
  auto* term_cmd = app.add_subcommand("term", "Evaluate one closed-form term f_m(x,t)");
  int term_m = 1;
  closed_form::SolverConfig term_cfg;
  EvalPoint term_p;
  term_cmd->add_option("--m", term_m, "Term index")->required();
  term_cmd->add_option("--nu", term_cfg.nu, "Viscosity")->capture_default_str();
  term_cmd->add_option("--x", term_p.x, "Position")->capture_default_str();
  term_cmd->add_option("--t", term_p.t, "Time")->capture_default_str();
  term_cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Profiles of the partial sum U_N (default: the shock-formation run)");
  closed_form::SolverConfig solve_cfg;
  std::vector<double> solve_ts{0.0, 1.0, 4.0};
  double solve_x_min = -2 * kPi, solve_x_max = 2 * kPi;
  std::size_t solve_nx = 401;
  solve_cmd->add_option("--nu", solve_cfg.nu, "Viscosity")->capture_default_str();
  solve_cmd->add_option("--N", solve_cfg.N, "Truncation order")->capture_default_str();
  solve_cmd->add_option("--t", solve_ts, "Output times")->delimiter(',')->capture_default_str();
  solve_cmd->add_option("--x-min", solve_x_min, "Left end")->capture_default_str();
  solve_cmd->add_option("--x-max", solve_x_max, "Right end")->capture_default_str();
  solve_cmd->add_option("--nx", solve_nx, "x samples")->capture_default_str();
  add_output_options(solve_cmd, out);

  // recurse
  auto* recurse_cmd = app.add_subcommand(
      "recurse",
      "Green's-function term recursion for an initial condition.\n"
      "  --ic exp-iz | cos | FILE, where FILE holds rows x,re[,im] (commas or\n"
      "  whitespace, optional header, '#' comments) with uniform x covering one\n"
      "  period without the repeated endpoint.");
  std::string recurse_ic = "exp-iz";
  double recurse_nu = 1.0;
  int recurse_N = 5;
  std::size_t recurse_nx = 128, recurse_nt = 64;
  double recurse_t_end = 3.0;
  std::string recurse_backend = "spectral";
  std::string recurse_binary;
  bool recurse_terms = false;
  greens::QuadratureSpec recurse_q;
  recurse_cmd->add_option("--ic", recurse_ic, "exp-iz, cos or a tabulated file")->capture_default_str();
  recurse_cmd->add_option("--nu", recurse_nu, "Viscosity")->capture_default_str();
  recurse_cmd->add_option("--N", recurse_N, "Number of terms")->capture_default_str();
  recurse_cmd->add_option("--nx", recurse_nx, "x nodes per period")->capture_default_str();
  recurse_cmd->add_option("--nt", recurse_nt, "Time levels")->capture_default_str();
  recurse_cmd->add_option("--t-end", recurse_t_end, "Final time")->capture_default_str();
  recurse_cmd->add_option("--backend", recurse_backend, "Spatial convolution")
      ->check(CLI::IsMember({"spectral", "hermite"}))->capture_default_str();
  recurse_cmd->add_option("--hermite-nodes", recurse_q.hermite_nodes, "Gauss-Hermite order")->capture_default_str();
  recurse_cmd->add_option("--time-nodes", recurse_q.time_nodes, "Gauss-Legendre order in time")->capture_default_str();
  recurse_cmd->add_option("--sub-tol", recurse_q.sub_tol, "Time quadrature tolerance")->capture_default_str();
  recurse_cmd->add_flag("--terms", recurse_terms, "Write every term (column 'm') instead of the partial sum");
  recurse_cmd->add_option("--binary", recurse_binary, "Also dump the partial sum in the binary grid format");
  add_output_options(recurse_cmd, out);

  // reference
  auto* reference_cmd = app.add_subcommand("reference", "Cole-Hopf and/or pseudo-spectral reference for exp(ix)");
  std::string reference_method = "cole-hopf";
  double reference_nu = 1.0;
  std::vector<double> reference_ts{1.0};
  std::size_t reference_nx = 64;
  double reference_dt = 0.0;
  reference_cmd->add_option("--method", reference_method, "cole-hopf, fd or both")
      ->check(CLI::IsMember({"cole-hopf", "fd", "both"}))->capture_default_str();
  reference_cmd->add_option("--nu", reference_nu, "Viscosity")->capture_default_str();
  reference_cmd->add_option("--t", reference_ts, "Output times (ascending, > 0)")->delimiter(',')->capture_default_str();
  reference_cmd->add_option("--nx", reference_nx, "x nodes on [0, 2pi), a power of two")->capture_default_str();
  reference_cmd->add_option("--dt", reference_dt, "fd time step (default: half the stability bound)");
  add_output_options(reference_cmd, out);

  // residual
  auto* residual_cmd = app.add_subcommand("residual", "Burgers-operator residual of U_N at a point");
  closed_form::SolverConfig residual_cfg{1.0, 20};
  EvalPoint residual_p{0.5, 0.5};
  double residual_h = 1e-4;
  residual_cmd->add_option("--nu", residual_cfg.nu, "Viscosity")->capture_default_str();
  residual_cmd->add_option("--N", residual_cfg.N, "Truncation order")->capture_default_str();
  residual_cmd->add_option("--x", residual_p.x, "Position")->capture_default_str();
  residual_cmd->add_option("--t", residual_p.t, "Time")->capture_default_str();
  residual_cmd->add_option("--step", residual_h, "Time difference step")->capture_default_str();
  residual_cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  // sweep-n
  auto* sweep_n_cmd = app.add_subcommand("sweep-n", "sup-norm error of U_N against Cole-Hopf for N = 1..N_max");
  std::vector<double> sweep_n_nus{1.0};
  int sweep_n_max = 25;
  DomainOptions sweep_n_dom;
  sweep_n_cmd->add_option("--nu", sweep_n_nus, "Viscosities")->delimiter(',')->capture_default_str();
  sweep_n_cmd->add_option("--N-max", sweep_n_max, "Largest truncation order")->capture_default_str();
  sweep_n_dom.add(sweep_n_cmd);
  sweep_n_cmd->add_option("--svg", out.svg, "Write a log-error plot");
  add_output_options(sweep_n_cmd, out);

  // sweep-nu
  auto* sweep_nu_cmd = app.add_subcommand("sweep-nu", "sup-norm error against viscosity for several N");
  std::vector<int> sweep_nu_Ns{10, 20, 30};
  double nu_min = 0.2, nu_max = 1.0, nu_step = 0.05;
  DomainOptions sweep_nu_dom;
  sweep_nu_cmd->add_option("--N", sweep_nu_Ns, "Truncation orders")->delimiter(',')->capture_default_str();
  sweep_nu_cmd->add_option("--nu-min", nu_min, "Smallest viscosity")->capture_default_str();
  sweep_nu_cmd->add_option("--nu-max", nu_max, "Largest viscosity")->capture_default_str();
  sweep_nu_cmd->add_option("--nu-step", nu_step, "Viscosity step")->capture_default_str();
  sweep_nu_dom.add(sweep_nu_cmd);
  sweep_nu_cmd->add_option("--svg", out.svg, "Write a log-error plot");
  add_output_options(sweep_nu_cmd, out);

  // ratio
  auto* ratio_cmd = app.add_subcommand("ratio", "Ratio-test constant r_m = S(m+1) / (m S(m))");
  int m_max = 300;
  ratio_cmd->add_option("--m-max", m_max, "Largest m (2..300)")->capture_default_str();
  add_output_options(ratio_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    set_max_threads(threads);

    if (*term_cmd) {
      if (term_m < 1) throw DomainError("term index m must be >= 1");
      closed_form::validate({term_cfg.nu, term_m});
      validate(term_p);
      const auto v = closed_form::term(term_m, term_cfg, term_p);
      if (out.format == "json") {
        std::cout << nlohmann::json{{"m", term_m}, {"nu", term_cfg.nu}, {"x", term_p.x}, {"t", term_p.t},
                                    {"re", v.real()}, {"im", v.imag()}}.dump() << "\n";
      } else {
        std::cout << complex_text(v) << "\n";
      }
    } else if (*solve_cmd) {
      const auto field = solve_field(solve_cfg.nu, solve_cfg.N, solve_x_min, solve_x_max, solve_nx, solve_ts);
      Sink sink(out, "solve.csv");
      report::write_field(field, sink.stream(), out.kind());
    } else if (*recurse_cmd) {
      greens::InitialCondition ic;
      double period = 2 * kPi;
      if (recurse_ic == "exp-iz" || recurse_ic == "cos") {
        ic = named_initial_condition(recurse_ic);
      } else {
        std::ifstream file(recurse_ic);
        if (!file) throw InputError("cannot read initial condition file " + recurse_ic);
        const auto table = read_tabulated(file);
        period = table.period;
        ic = interpolant(table);
      }
      if (recurse_N < 1) throw DomainError("N must be >= 1");
      const auto grid = greens::make_grid(recurse_nx, period, recurse_nt, recurse_t_end);
      const auto backend = recurse_backend == "hermite" ? greens::Backend::GaussHermite
                                                        : greens::Backend::PeriodicSpectral;
      const auto result = greens::recurse(ic, recurse_nu, grid, recurse_N, recurse_q, backend);
      Sink sink(out, "recurse.csv");
      if (recurse_terms) {
        auto& os = sink.stream();
        if (out.kind() == report::Format::Json) {
          nlohmann::json rows = nlohmann::json::array();
          for (std::size_t m = 0; m < result.terms.size(); ++m) {
            const auto& f = result.terms[m];
            for (std::size_t it = 0; it < f.nt(); ++it) {
              for (std::size_t ix = 0; ix < f.nx(); ++ix) {
                rows.push_back({{"m", m + 1}, {"x", f.xs[ix]}, {"t", f.ts[it]},
                                {"re", f.at(ix, it).real()}, {"im", f.at(ix, it).imag()}});
              }
            }
          }
          os << rows.dump(2) << "\n";
        } else {
          os << "m,x,t,re,im\n";
          for (std::size_t m = 0; m < result.terms.size(); ++m) {
            const auto& f = result.terms[m];
            for (std::size_t it = 0; it < f.nt(); ++it) {
              for (std::size_t ix = 0; ix < f.nx(); ++ix) {
                os << m + 1 << ',' << report::format_number(f.xs[ix]) << ',' << report::format_number(f.ts[it])
                   << ',' << report::format_number(f.at(ix, it).real()) << ','
                   << report::format_number(f.at(ix, it).imag()) << '\n';
              }
            }
          }
        }
      } else {
        report::write_field(result.partial_sum, sink.stream(), out.kind());
      }
      if (!recurse_binary.empty()) {
        std::ofstream bin(recurse_binary, std::ios::binary);
        if (!bin) throw InputError("cannot open " + recurse_binary);
        write_binary(result.partial_sum, bin);
      }
    } else if (*reference_cmd) {
      if (!(reference_nu > 0)) throw DomainError("viscosity nu must be positive");
      for (std::size_t i = 0; i < reference_ts.size(); ++i) {
        if (!(reference_ts[i] > 0)) throw DomainError("reference times must be positive");
        if (i > 0 && !(reference_ts[i] > reference_ts[i - 1])) throw DomainError("reference times must increase");
      }
      const auto grid = periodic_grid(reference_nx, 2 * kPi, reference_ts);
      GridField cole = grid;
      GridField fd = grid;
      const bool want_cole = reference_method != "fd";
      const bool want_fd = reference_method != "cole-hopf";
      if (want_cole) {
        parallel_for(grid.values.size(), [&](std::size_t node) {
          const std::size_t ix = node % grid.nx();
          const std::size_t it = node / grid.nx();
          cole.values[node] = reference::cole_hopf<double>(reference_nu, grid.xs[ix], grid.ts[it]);
        });
      }
      if (want_fd) {
        std::vector<std::complex<double>> ic(grid.nx());
        for (std::size_t j = 0; j < ic.size(); ++j) ic[j] = std::polar(1.0, grid.xs[j]);
        const double dt = reference_dt > 0 ? reference_dt : 0.5 * reference::fd_stable_step(ic, 2 * kPi);
        fd = reference::fd_solve(ic, 2 * kPi, reference_nu, reference_ts.back(), dt, reference_ts);
      }
      Sink sink(out, "reference.csv");
      if (reference_method == "both") {
        auto& os = sink.stream();
        if (out.kind() == report::Format::Json) {
          nlohmann::json rows = nlohmann::json::array();
          for (std::size_t node = 0; node < grid.values.size(); ++node) {
            rows.push_back({{"x", grid.xs[node % grid.nx()]}, {"t", grid.ts[node / grid.nx()]},
                            {"cole_hopf_re", cole.values[node].real()}, {"cole_hopf_im", cole.values[node].imag()},
                            {"fd_re", fd.values[node].real()}, {"fd_im", fd.values[node].imag()}});
          }
          os << rows.dump(2) << "\n";
        } else {
          os << "x,t,cole_hopf_re,cole_hopf_im,fd_re,fd_im\n";
          for (std::size_t node = 0; node < grid.values.size(); ++node) {
            os << report::format_number(grid.xs[node % grid.nx()]) << ','
               << report::format_number(grid.ts[node / grid.nx()]) << ','
               << report::format_number(cole.values[node].real()) << ','
               << report::format_number(cole.values[node].imag()) << ','
               << report::format_number(fd.values[node].real()) << ','
               << report::format_number(fd.values[node].imag()) << '\n';
          }
        }
      } else {
        report::write_field(want_cole ? cole : fd, sink.stream(), out.kind());
      }
    } else if (*residual_cmd) {
      closed_form::validate(residual_cfg);
      validate(residual_p);
      if (!(residual_h > 0)) throw DomainError("step h must be positive");
      const auto r = closed_form::residual(residual_cfg, residual_p, residual_h);
      if (out.format == "json") {
        std::cout << nlohmann::json{{"x", residual_p.x}, {"t", residual_p.t}, {"re", r.real()},
                                    {"im", r.imag()}, {"abs", std::abs(r)}}.dump() << "\n";
      } else {
        std::cout << "x,t,re,im,abs\n"
                  << report::format_number(residual_p.x) << ',' << report::format_number(residual_p.t) << ','
                  << report::format_number(r.real()) << ',' << report::format_number(r.imag()) << ','
                  << report::format_number(std::abs(r)) << "\n";
      }
    } else if (*sweep_n_cmd) {
      std::vector<analysis::ErrorRecord> records;
      std::vector<report::Series> series;
      for (double nu : sweep_n_nus) {
        const auto part = analysis::sweep_N(nu, sweep_n_max, sweep_n_dom.dom);
        report::Series s{"nu=" + report::format_number(nu), {}};
        for (const auto& r : part) s.points.emplace_back(r.N, r.sup_error);
        series.push_back(std::move(s));
        records.insert(records.end(), part.begin(), part.end());
      }
      Sink sink(out, "sweep_n.csv");
      report::write_sweep_n(records, sink.stream(), out.kind());
      write_svg(out.svg, report::svg_plot(series, "N", "sup error", true));
    } else if (*sweep_nu_cmd) {
      if (!(nu_step > 0) || !(nu_min > 0) || !(nu_max >= nu_min)) {
        throw DomainError("need 0 < nu-min <= nu-max and nu-step > 0");
      }
      std::vector<double> nus;
      const auto count = static_cast<int>(std::floor((nu_max - nu_min) / nu_step + 1e-9));
      for (int i = 0; i <= count; ++i) nus.push_back(nu_min + nu_step * i);
      const auto records = analysis::sweep_nu(sweep_nu_Ns, nus, sweep_nu_dom.dom);
      Sink sink(out, "sweep_nu.csv");
      report::write_sweep_nu(records, sink.stream(), out.kind());
      std::vector<report::Series> series;
      for (int N : sweep_nu_Ns) {
        report::Series s{"N=" + std::to_string(N), {}};
        for (const auto& r : records) {
          if (r.N == N) s.points.emplace_back(r.nu, r.sup_error);
        }
        series.push_back(std::move(s));
      }
      write_svg(out.svg, report::svg_plot(series, "nu", "sup error", true));
      for (int N : sweep_nu_Ns) {
        if (const auto onset = analysis::upturn_onset(records, N)) {
          std::cerr << "N=" << N << ": error upturn at nu <= " << report::format_number(*onset) << "\n";
        }
      }
    } else if (*ratio_cmd) {
      const auto ratios = analysis::estimate_r(m_max);
      const double richardson = analysis::richardson_limit(ratios);
      Sink sink(out, "ratio.csv");
      report::write_ratio(ratios, sink.stream(), out.kind());
      std::ostream& summary = sink.to_file() ? std::cout : std::cerr;
      summary << "r_" << m_max << "=" << report::format_number(ratios.back().r)
              << " richardson=" << report::format_number(richardson) << "\n";
    }
  } catch (const AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kAccuracy;
  } catch (const NearSingularError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kAccuracy;
  } catch (const BlowUpError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kAccuracy;
  } catch (const OverflowError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kAccuracy;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
