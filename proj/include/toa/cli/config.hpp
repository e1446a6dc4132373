#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toa/expectation.hpp"
#include "toa/potential.hpp"
#include "toa/rational.hpp"

namespace toa::cli {

/// Invalid or unreadable configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

/// Parsed run configuration. See docs/config.md for the JSON schema.
struct RunConfig {
  std::vector<Rational> potential;
  Rational mu = 1;
  double hbar = 1.0;
  int n_max = 3;
  int k_max = 21;
  /// Empty when the file did not choose; each command has its own default.
  std::string format;
  std::string out;

  std::vector<GaussianState> states;
  /// Quartic grid (q, p) pairs and kernel grid axes.
  std::vector<double> grid_q;
  std::vector<double> grid_p;
  std::vector<double> grid_qprime;
  std::vector<std::string> routes{"series"};

  bool inject_corruption = false;

  PolynomialPotential potential_function() const { return PolynomialPotential(potential); }
  double mu_value() const { return to_double(mu); }
  OutputFormat output_format(OutputFormat fallback) const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace toa::cli
