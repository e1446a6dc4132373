#include "toa/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toa/errors.hpp"

namespace toa::cli {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& name) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
  } catch (const PreconditionError& e) {
    throw ConfigError(name + ": " + e.what());
  }
  throw ConfigError(name + ": expected a rational string such as \"4/5\"");
}

double number_field(const json& j, const std::string& name) {
  if (!j.is_number()) throw ConfigError(name + ": expected a number");
  return j.get<double>();
}

int int_field(const json& j, const std::string& name, int min_value) {
  if (!j.is_number_integer()) throw ConfigError(name + ": expected an integer");
  const long v = j.get<long>();
  if (v < min_value || v > 100000) throw ConfigError(name + ": must be >= " + std::to_string(min_value));
  return static_cast<int>(v);
}

std::vector<double> number_list(const json& j, const std::string& name) {
  if (!j.is_array()) throw ConfigError(name + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number_field(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ConfigError(where + "unknown field '" + key + "'");
  }
}

}  // namespace

OutputFormat RunConfig::output_format(OutputFormat fallback) const {
  if (format.empty()) return fallback;
  return format == "json" ? OutputFormat::json : OutputFormat::csv;
}

RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(root,
                 {"potential", "mu", "hbar", "N_max", "K_max", "format", "out", "states", "grid", "routes",
                  "inject_corruption"},
                 "");

  RunConfig c;
  if (!root.contains("potential")) throw ConfigError("potential: required field missing");
  const json& pot = root["potential"];
  if (!pot.is_array() || pot.empty()) throw ConfigError("potential: expected a nonempty list of rational strings");
  for (std::size_t i = 0; i < pot.size(); ++i) {
    c.potential.push_back(rational_field(pot[i], "potential[" + std::to_string(i) + "]"));
  }
  if (root.contains("mu")) c.mu = rational_field(root["mu"], "mu");
  if (c.mu <= 0) throw ConfigError("mu: must be positive");
  if (root.contains("hbar")) c.hbar = number_field(root["hbar"], "hbar");
  if (!(c.hbar > 0)) throw ConfigError("hbar: must be positive");
  if (root.contains("N_max")) c.n_max = int_field(root["N_max"], "N_max", 0);
  if (root.contains("K_max")) c.k_max = int_field(root["K_max"], "K_max", 1);
  if (root.contains("format")) {
    if (!root["format"].is_string()) throw ConfigError("format: expected \"csv\" or \"json\"");
    c.format = root["format"].get<std::string>();
    if (c.format != "csv" && c.format != "json") throw ConfigError("format: expected \"csv\" or \"json\"");
  }
  if (root.contains("out")) {
    if (!root["out"].is_string()) throw ConfigError("out: expected a path string");
    c.out = root["out"].get<std::string>();
  }
  if (root.contains("states")) {
    const json& states = root["states"];
    if (!states.is_array()) throw ConfigError("states: expected an array of objects");
    for (std::size_t i = 0; i < states.size(); ++i) {
      const std::string where = "states[" + std::to_string(i) + "]";
      const json& s = states[i];
      if (!s.is_object()) throw ConfigError(where + ": expected an object");
      reject_unknown(s, {"q0", "k0", "sigma", "hbar", "mu"}, where + ": ");
      GaussianState g;
      g.hbar = c.hbar;
      g.mu = c.mu_value();
      for (const char* key : {"q0", "k0", "sigma"}) {
        if (!s.contains(key)) throw ConfigError(where + "." + key + ": required field missing");
      }
      g.q0 = number_field(s["q0"], where + ".q0");
      g.k0 = number_field(s["k0"], where + ".k0");
      g.sigma = number_field(s["sigma"], where + ".sigma");
      if (s.contains("hbar")) g.hbar = number_field(s["hbar"], where + ".hbar");
      if (s.contains("mu")) g.mu = number_field(s["mu"], where + ".mu");
      if (!(g.sigma > 0)) throw ConfigError(where + ".sigma: must be positive");
      if (!(g.hbar > 0) || !(g.mu > 0)) throw ConfigError(where + ": hbar and mu must be positive");
      c.states.push_back(g);
    }
  }
  if (root.contains("grid")) {
    const json& grid = root["grid"];
    if (!grid.is_object()) throw ConfigError("grid: expected an object");
    reject_unknown(grid, {"q", "p", "qprime"}, "grid: ");
    if (grid.contains("q")) c.grid_q = number_list(grid["q"], "grid.q");
    if (grid.contains("p")) c.grid_p = number_list(grid["p"], "grid.p");
    if (grid.contains("qprime")) c.grid_qprime = number_list(grid["qprime"], "grid.qprime");
  }
  if (root.contains("routes")) {
    const json& routes = root["routes"];
    if (!routes.is_array() || routes.empty()) throw ConfigError("routes: expected a nonempty array");
    c.routes.clear();
    for (const auto& r : routes) {
      if (!r.is_string() || (r != "series" && r != "quadrature")) {
        throw ConfigError("routes: entries must be \"series\" or \"quadrature\"");
      }
      c.routes.push_back(r.get<std::string>());
    }
  }
  if (root.contains("inject_corruption")) {
    if (!root["inject_corruption"].is_boolean()) throw ConfigError("inject_corruption: expected a boolean");
    c.inject_corruption = root["inject_corruption"].get<bool>();
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace toa::cli
