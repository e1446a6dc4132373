#pragma once

#include <functional>
#include <vector>

namespace toa {

enum class QuadratureRule { gauss_legendre, gauss_hermite, pv_symmetric };

/// Quadrature request.
///
/// gauss_legendre integrates over [lower, upper] split into `panels` equal
/// sub-intervals. gauss_hermite integrates over the real line with nodes
/// placed at center + scale * t_i. pv_symmetric takes the Cauchy principal
/// value over [lower, upper] with a simple pole at `singularity`.
struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::gauss_legendre;
  int node_count = 64;
  double lower = -1.0;
  double upper = 1.0;
  int panels = 1;
  double center = 0.0;
  double scale = 1.0;
  double singularity = 0.0;
  /// Principal value only: number of exclusion radii eps_0 / 2^k used by the
  /// Richardson table, the starting radius as a fraction of the symmetric
  /// half-width, and the accepted extrapolation error.
  int pv_levels = 6;
  double pv_initial_fraction = 0.0625;
  double pv_tolerance = 1e-8;
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; rules are cached.
const GaussRule& gauss_legendre_rule(int n);

/// n-point Gauss-Hermite rule for weight exp(-t^2). The returned weights are
/// multiplied by exp(t_i^2), so sum_i w_i f(t_i) approximates the plain
/// integral of f. Supports n up to 150.
const GaussRule& gauss_hermite_rule(int n);

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
};

/// Integral of f under spec. Throws EvaluationError when f returns a
/// non-finite value at a node, PreconditionError for malformed specs and
/// ConvergenceError when the principal-value extrapolation does not settle.
QuadratureResult integrate_with_error(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec);

inline double integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return integrate_with_error(f, spec).value;
}

struct QuadraturePoint {
  double x;
  double w;
};

/// Nodes and weights of a Gauss-Legendre or Gauss-Hermite spec, in the same
/// order integrate() uses. Throws PreconditionError for pv_symmetric.
std::vector<QuadraturePoint> quadrature_points(const QuadratureSpec& spec);

/// Pairwise (cascade) summation, independent of thread scheduling.
double pairwise_sum(const std::vector<double>& values);

}  // namespace toa
