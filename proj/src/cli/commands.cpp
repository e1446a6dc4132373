#include "toa/cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "toa/classical_toa.hpp"
#include "toa/cli/output.hpp"
#include "toa/errors.hpp"
#include "toa/moyal_engine.hpp"
#include "toa/quartic_bench.hpp"
#include "toa/weyl_kernel.hpp"

namespace toa::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kRouteTolerance = 1e-6;
constexpr int kMaxQuadratureGrade = 2;

std::string output_path(const RunConfig& config, const CommandOptions& options) {
  return options.out.empty() ? config.out : options.out;
}

Json rational_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

double relative_deviation(double a, double reference) {
  const double diff = std::abs(a - reference);
  const double scale = std::abs(reference);
  return scale > 0 ? diff / scale : diff;
}

struct Check {
  std::string name;
  bool pass;
  Json detail;
};

}  // namespace

int cmd_series(const RunConfig& config, const CommandOptions& options) {
  if (config.output_format(OutputFormat::json) != OutputFormat::json) {
    throw ConfigError("format: the series command writes json only");
  }
  const PhaseSeries series = build_moyal_toa(config.potential_function(), config.mu, config.n_max, config.k_max);
  Json j;
  j["potential"] = rational_list(config.potential);
  j["mu"] = to_string(config.mu);
  j["N_max"] = config.n_max;
  j["K_max"] = config.k_max;
  Json entries = Json::array();
  for (int n = 0; n <= series.max_grade(); ++n) {
    for (const auto& [m, poly] : series.grade(n)) {
      entries.push_back(Json{{"n", n}, {"m", m}, {"coeffs", rational_list(poly.coeffs())}});
    }
  }
  j["entries"] = entries;
  write_atomically(output_path(config, options), j.dump(2) + "\n");
  return kExitSuccess;
}

int cmd_verify(const RunConfig& config, const CommandOptions& options) {
  const PolynomialPotential v = config.potential_function();
  PhaseSeries series = build_moyal_toa(v, config.mu, config.n_max, config.k_max);
  if (config.inject_corruption) {
    GradedSeries terms = series.terms();
    terms.add(0, -1, QPoly::monomial(Rational(1), 2));
    series = PhaseSeries(terms, config.mu, config.n_max, config.k_max);
  }

  std::vector<Check> checks;
  const BracketReport bracket = moyal_bracket(v, series);
  checks.push_back({"moyal_bracket", bracket.pass,
                    Json{{"constant_term", to_string(bracket.constant_term)},
                         {"interior_residuals", bracket.interior_residuals().size()},
                         {"boundary_orders", bracket.boundary_orders.size()}}});
  checks.push_back({"time_reversal", check_time_reversal(series), Json::object()});

  bool exponents_ok = true;
  for (int n = 0; n <= series.max_grade(); ++n) {
    for (const auto& [m, poly] : series.grade(n)) exponents_ok = exponents_ok && -m >= v.min_abs_p_exponent(n);
  }
  checks.push_back({"minimum_exponent", exponents_ok, Json{{"four_n_plus_one_law", v.degree() <= 4}}});

  if (v.is_linear_system()) {
    bool empty = true;
    for (int n = 1; n <= series.max_grade(); ++n) empty = empty && series.grade_empty(n);
    const bool equal = series.terms() == ltoa_series(v, config.mu, config.k_max).terms();
    checks.push_back({"linear_collapse", empty && equal, Json{{"corrections_empty", empty}}});
  }

  const KernelSeries kernel = weyl_map_series(series);
  const KernelBoundaryReport boundaries = check_kernel_boundaries(kernel);
  checks.push_back({"kernel_boundaries", boundaries.ok(),
                    Json{{"diagonal", boundaries.diagonal_ok},
                         {"antidiagonal", boundaries.antidiagonal_ok},
                         {"symmetric", boundaries.symmetric_ok}}});
  const TkeSeriesReport tke = tke_residual(kernel, v);
  checks.push_back({"time_kernel_equation", tke.interior_zero(), Json{{"max_abs_interior", tke.max_abs_interior()}}});
  checks.push_back({"inverse_weyl_roundtrip", inverse_weyl_roundtrip(kernel) == series, Json::object()});

  bool all = true;
  Json report;
  report["potential"] = rational_list(config.potential);
  report["mu"] = to_string(config.mu);
  report["N_max"] = config.n_max;
  report["K_max"] = config.k_max;
  Json list = Json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    list.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) std::cerr << "verify: check " << c.name << " failed: " << c.detail.dump() << "\n";
  }
  report["checks"] = list;
  report["pass"] = all;
  write_atomically(output_path(config, options), report.dump(2) + "\n");
  return all ? kExitSuccess : kExitVerificationFailure;
}

int cmd_expectation(const RunConfig& config, const CommandOptions& options) {
  if (config.states.empty()) throw ConfigError("states: the expectation command needs at least one state");
  const PolynomialPotential v = config.potential_function();
  const bool free = v.is_zero();
  std::optional<PhaseSeries> series;
  if (!free) series = build_moyal_toa(v, config.mu, config.n_max, config.k_max);

  std::ostringstream csv;
  csv << "state,q0,k0,sigma,hbar,mu,closed_form,pv_quadrature,pv_est_error,excluded_mass,rel_dev,status\n";
  Json records = Json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < config.states.size(); ++i) {
    const GaussianState& s = config.states[i];
    if (!free && s.mu != config.mu_value()) {
      throw ConfigError("states[" + std::to_string(i) + "].mu: must equal the series mass for an interacting potential");
    }
    double closed = std::nan("");
    ExpectationResult pv;
    std::string status = "ok";
    if (free) closed = free_toa_closed_form(s).value;
    try {
      if (free) {
        const double mu = s.mu;
        pv = toa_expectation([mu](double q, double p) { return -mu * q / p; },
                             [&s](double q, double p) { return wigner_gaussian(s, q, p); }, default_quadrature(s));
      } else {
        pv = interacting_expectation(*series, v, s);
      }
    } catch (const ConvergenceError& e) {
      pv.value = std::nan("");
      status = "non-convergent";
      std::cerr << "expectation: state " << i << ": " << e.what() << "\n";
    }
    const double rel = free ? relative_deviation(pv.value, closed) : std::nan("");
    if (status == "ok" && free && !(rel <= kRouteTolerance)) status = "mismatch";
    if (status == "ok" && !(pv.excluded_mass <= kRouteTolerance)) status = "excluded-region";
    if (status != "ok") all_ok = false;
    csv << i << "," << format_double(s.q0) << "," << format_double(s.k0) << "," << format_double(s.sigma) << ","
        << format_double(s.hbar) << "," << format_double(s.mu) << "," << format_double(closed) << ","
        << format_double(pv.value) << "," << format_double(pv.est_error) << "," << format_double(pv.excluded_mass)
        << "," << format_double(rel) << "," << status << "\n";
    const Json state{{"q0", s.q0}, {"k0", s.k0}, {"sigma", s.sigma}, {"hbar", s.hbar}, {"mu", s.mu}};
    if (free) {
      records.push_back(Json{{"state", state}, {"method", to_string(ExpectationMethod::closed_form)},
                             {"value", closed}, {"est_error", 0.0}});
    }
    Json rec{{"state", state}, {"method", to_string(ExpectationMethod::pv_quadrature)},
             {"value", std::isnan(pv.value) ? Json(nullptr) : Json(pv.value)}, {"est_error", pv.est_error}};
    if (!free) rec["excluded_mass"] = pv.excluded_mass;
    records.push_back(rec);
  }
  const std::string content =
      config.output_format(OutputFormat::csv) == OutputFormat::json ? records.dump(2) + "\n" : csv.str();
  write_atomically(output_path(config, options), content);
  if (!all_ok) std::cerr << "expectation: some rows are not ok\n";
  return all_ok || !options.strict ? kExitSuccess : kExitVerificationFailure;
}

int cmd_quartic(const RunConfig& config, const CommandOptions& options) {
  const PolynomialPotential v = config.potential_function();
  const auto& coeffs = v.poly().coeffs();
  if (v.degree() != 4 || coeffs[0] != 0 || coeffs[1] != 0 || coeffs[2] != 0 || coeffs[3] != 0) {
    throw ConfigError("potential: the quartic command needs V = lambda q^4, i.e. [\"0\",\"0\",\"0\",\"0\",\"lambda\"]");
  }
  if (config.output_format(OutputFormat::csv) != OutputFormat::csv) {
    throw ConfigError("format: the quartic command writes csv only");
  }
  QuarticParams params{to_double(coeffs[4]), config.mu_value(), config.hbar};
  std::vector<std::pair<double, double>> grid;
  for (double q : config.grid_q) {
    for (double p : config.grid_p) grid.emplace_back(q, p);
  }
  const PhaseSeries engine = build_moyal_toa(v, config.mu, std::min(config.n_max, 3), config.k_max);
  const auto rows = quartic_report(params, grid, engine);

  std::ostringstream csv;
  csv << "q,p,quantity,engine_value,closed_form_value,rel_dev,status\n";
  bool all_ok = true;
  for (const auto& r : rows) {
    csv << format_double(r.q) << "," << format_double(r.p) << "," << r.quantity << "," << format_double(r.engine_value)
        << "," << format_double(r.closed_form_value) << "," << format_double(r.rel_dev) << "," << r.status << "\n";
    if (r.status == "ok") continue;
    all_ok = false;
    std::cerr << "quartic: " << r.quantity << " at (" << r.q << ", " << r.p << ") " << r.status << "\n";
    if (r.status == "mismatch" && (r.quantity == "T_2" || r.quantity == "T_3")) {
      const auto breakdown = quartic_correction_breakdown(r.quantity == "T_2" ? 2 : 3, params, r.q, r.p);
      for (const auto& t : breakdown.terms) {
        std::cerr << "  term " << t.label << " = " << format_double(breakdown.prefactor * t.value) << "\n";
      }
    }
  }
  write_atomically(output_path(config, options), csv.str());
  return all_ok || !options.strict ? kExitSuccess : kExitVerificationFailure;
}

int cmd_kernel(const RunConfig& config, const CommandOptions& options) {
  if (config.grid_q.empty() || config.grid_qprime.empty()) {
    throw ConfigError("grid: the kernel command needs grid.q and grid.qprime");
  }
  if (config.output_format(OutputFormat::csv) != OutputFormat::csv) {
    throw ConfigError("format: the kernel command writes csv only");
  }
  const PolynomialPotential v = config.potential_function();
  std::ostringstream csv;
  csv << "q,qprime,grade,value,route\n";
  const auto emit = [&](const KernelGrid& g) {
    for (std::size_t i = 0; i < g.q_nodes.size(); ++i) {
      for (std::size_t j = 0; j < g.qp_nodes.size(); ++j) {
        csv << format_double(g.q_nodes[i]) << "," << format_double(g.qp_nodes[j]) << "," << g.grade << ","
            << format_double(g.values[i][j]) << "," << to_string(g.route) << "\n";
      }
    }
  };
  for (const auto& route : config.routes) {
    if (route == "series") {
      const KernelSeries kernel = weyl_map_series(build_moyal_toa(v, config.mu, config.n_max, config.k_max));
      for (int n = 0; n <= config.n_max; ++n) {
        emit(sample_kernel_series(kernel, config.hbar, config.grid_q, config.grid_qprime, n));
      }
    } else {
      const int top = std::min(config.n_max, kMaxQuadratureGrade);
      if (top < config.n_max) {
        std::cerr << "kernel: quadrature route stops at grade " << kMaxQuadratureGrade << "\n";
      }
      for (int n = 0; n <= top; ++n) {
        emit(sample_kernel_quadrature(v, config.mu_value(), config.hbar, top, config.grid_q, config.grid_qprime, n));
      }
    }
  }
  write_atomically(output_path(config, options), csv.str());
  return kExitSuccess;
}

int run_command(const std::string& name, const std::string& config_path, const CommandOptions& options) {
  try {
    const RunConfig config = load_config(config_path);
    if (name == "series") return cmd_series(config, options);
    if (name == "verify") return cmd_verify(config, options);
    if (name == "expectation") return cmd_expectation(config, options);
    if (name == "quartic") return cmd_quartic(config, options);
    if (name == "kernel") return cmd_kernel(config, options);
    std::cerr << "toa: unknown command '" << name << "'\n";
    return kExitConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "toa: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const PreconditionError& e) {
    std::cerr << "toa: invalid input: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace toa::cli
