#include "toa/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "toa/errors.hpp"

namespace toa {

namespace {

constexpr double kPi = 3.14159265358979323846;

GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

// Orthonormal Hermite recurrence; returns (psi_n(x), psi_{n-1}(x)).
std::pair<double, double> hermite_pair(int n, double x) {
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  double p1 = pim4;
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
  }
  return {p1, p2};
}

GaussRule make_gauss_hermite(int n) {
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(n, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      auto [p1, p2] = hermite_pair(n, z);
      pp = std::sqrt(2.0 * n) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 3e-15 * std::max(1.0, std::abs(z))) break;
    }
    auto [p1, p2] = hermite_pair(n, z);
    (void)p1;
    pp = std::sqrt(2.0 * n) * p2;
    const double w = 2.0 / (pp * pp);
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    const double scaled = std::exp(std::log(w) + z * z);
    rule.weights[i] = scaled;
    rule.weights[n - 1 - i] = scaled;
  }
  // Stored ascending.
  std::vector<double> nodes(rule.nodes.rbegin(), rule.nodes.rend());
  std::vector<double> weights(rule.weights.rbegin(), rule.weights.rend());
  rule.nodes = std::move(nodes);
  rule.weights = std::move(weights);
  return rule;
}

template <typename Make>
const GaussRule& cached_rule(std::map<int, std::unique_ptr<GaussRule>>& cache, std::mutex& mu,
                             int n, Make make) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<GaussRule>(make(n))).first;
  return *it->second;
}

double checked(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw EvaluationError("integrand is not finite at node " + std::to_string(x));
  }
  return y;
}

double legendre_composite(const std::function<double(double)>& f, double a, double b, int n,
                          int panels) {
  if (a == b) return 0.0;
  const GaussRule& rule = gauss_legendre_rule(n);
  const double width = (b - a) / panels;
  std::vector<double> parts(static_cast<std::size_t>(panels) * n);
  std::size_t k = 0;
  for (int j = 0; j < panels; ++j) {
    const double lo = a + j * width;
    const double half = 0.5 * width;
    const double mid = lo + half;
    for (int i = 0; i < n; ++i) parts[k++] = half * rule.weights[i] * checked(f, mid + half * rule.nodes[i]);
  }
  return pairwise_sum(parts);
}

QuadratureResult principal_value(const std::function<double(double)>& f, const QuadratureSpec& s) {
  const double c = s.singularity;
  if (!(s.lower < c && c < s.upper)) {
    throw PreconditionError("principal-value singularity must lie strictly inside the domain");
  }
  if (s.pv_levels < 2) throw PreconditionError("principal value needs at least two extrapolation levels");
  const double delta = std::min(c - s.lower, s.upper - c);
  const auto folded = [&](double t) { return checked(f, c + t) + checked(f, c - t); };

  double remainder = 0.0;
  if (s.upper - c > delta) remainder = legendre_composite(f, c + delta, s.upper, s.node_count, s.panels);
  if (c - s.lower > delta) remainder = legendre_composite(f, s.lower, c - delta, s.node_count, s.panels);

  // Symmetric exclusion integrals I(eps) = I(0) + c1 eps + c3 eps^3 + ...
  const int levels = s.pv_levels;
  std::vector<std::vector<double>> table(levels);
  double eps = s.pv_initial_fraction * delta;
  for (int k = 0; k < levels; ++k, eps *= 0.5) {
    table[k].push_back(legendre_composite(folded, eps, delta, s.node_count, s.panels));
    for (int j = 1; j <= k; ++j) {
      const double factor = std::pow(2.0, 2 * j - 1) - 1.0;
      table[k].push_back(table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor);
    }
  }
  const double best = table[levels - 1][levels - 1];
  const double err = std::abs(best - table[levels - 1][levels - 2]);
  const double value = best + remainder;
  if (!(err <= s.pv_tolerance * std::max(1.0, std::abs(value)))) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", err);
    throw ConvergenceError(std::string("principal-value extrapolation did not converge (error estimate ") + buf + ")");
  }
  return {value, err};
}

}  // namespace

const GaussRule& gauss_legendre_rule(int n) {
  if (n < 2) throw PreconditionError("Gauss-Legendre rule needs at least 2 nodes");
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex mu;
  return cached_rule(cache, mu, n, make_gauss_legendre);
}

const GaussRule& gauss_hermite_rule(int n) {
  if (n < 2 || n > 150) throw PreconditionError("Gauss-Hermite rule supports 2..150 nodes");
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  static std::mutex mu;
  return cached_rule(cache, mu, n, make_gauss_hermite);
}

double pairwise_sum(const std::vector<double>& values) {
  const auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += values[i];
      return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return self(self, lo, mid) + self(self, mid, hi);
  };
  return rec(rec, 0, values.size());
}

std::vector<QuadraturePoint> quadrature_points(const QuadratureSpec& spec) {
  if (spec.node_count < 2) throw PreconditionError("quadrature needs at least 2 nodes");
  if (spec.panels < 1) throw PreconditionError("quadrature needs at least one panel");
  std::vector<QuadraturePoint> out;
  if (spec.rule == QuadratureRule::gauss_legendre) {
    const GaussRule& rule = gauss_legendre_rule(spec.node_count);
    const double width = (spec.upper - spec.lower) / spec.panels;
    for (int j = 0; j < spec.panels; ++j) {
      const double half = 0.5 * width;
      const double mid = spec.lower + j * width + half;
      for (int i = 0; i < spec.node_count; ++i) out.push_back({mid + half * rule.nodes[i], half * rule.weights[i]});
    }
    return out;
  }
  if (spec.rule == QuadratureRule::gauss_hermite) {
    const GaussRule& rule = gauss_hermite_rule(spec.node_count);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      out.push_back({spec.center + spec.scale * rule.nodes[i], spec.scale * rule.weights[i]});
    }
    return out;
  }
  throw PreconditionError("principal-value rules have no fixed node set");
}

QuadratureResult integrate_with_error(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec) {
  if (spec.node_count < 2) throw PreconditionError("quadrature needs at least 2 nodes");
  if (spec.panels < 1) throw PreconditionError("quadrature needs at least one panel");
  switch (spec.rule) {
    case QuadratureRule::gauss_legendre:
      return {legendre_composite(f, spec.lower, spec.upper, spec.node_count, spec.panels), 0.0};
    case QuadratureRule::gauss_hermite: {
      const GaussRule& rule = gauss_hermite_rule(spec.node_count);
      std::vector<double> parts(rule.nodes.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i] = spec.scale * rule.weights[i] * checked(f, spec.center + spec.scale * rule.nodes[i]);
      }
      return {pairwise_sum(parts), 0.0};
    }
    case QuadratureRule::pv_symmetric:
      return principal_value(f, spec);
  }
  throw PreconditionError("unknown quadrature rule");
}

}  // namespace toa
