#include "toa/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "toa/errors.hpp"

namespace toa {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kErfiSeriesLimit = 6.0;

bool is_nonpositive_integer(double b) { return b <= 0.0 && std::floor(b) == b; }

double term_ratio(const HypergeomSpec& s, std::size_t k) {
  const double kk = static_cast<double>(k);
  double r = s.z / (kk + 1.0);
  for (double a : s.a_params) r *= a + kk;
  for (double b : s.b_params) r /= b + kk;
  return r;
}

// sum_{n>=0} x^(2n+1) / (n! (2n+1)); all terms share the sign of x.
double erfi_series_sum(double x) {
  const double x2 = x * x;
  double t = x;
  double sum = x;
  for (int n = 1; n < 2000; ++n) {
    t *= x2 / n;
    const double term = t / (2 * n + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// sum_n (2n-1)!! / (2x^2)^n, truncated at its smallest term.
double erfi_asymptotic_sum(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 500; ++n) {
    const double next = term * (2 * n - 1) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double hyp_pfq(const HypergeomSpec& spec, double rel_tol, std::size_t max_terms) {
  for (double b : spec.b_params) {
    if (is_nonpositive_integer(b)) {
      throw PreconditionError("pFq b-parameter " + std::to_string(b) + " is a non-positive integer");
    }
  }
  if (!std::isfinite(spec.z)) throw DomainError("pFq argument must be finite");
  if (spec.z == 0.0) return 1.0;
  const std::size_t p = spec.a_params.size();
  const std::size_t q = spec.b_params.size();
  if (p > q + 1 && std::none_of(spec.a_params.begin(), spec.a_params.end(), is_nonpositive_integer)) throw DomainError("pFq with p > q + 1 diverges for z != 0");
  const bool unit_radius = p == q + 1;
  const bool terminating = std::any_of(spec.a_params.begin(), spec.a_params.end(), is_nonpositive_integer);
  if (unit_radius && !terminating && std::abs(spec.z) >= 1.0) {
    throw DomainError("pFq argument z = " + std::to_string(spec.z) + " is outside convergence region |z| < 1");
  }

  double term = 1.0;
  double sum = 1.0;
  for (std::size_t k = 0; k < max_terms; ++k) {
    term *= term_ratio(spec, k);
    if (term == 0.0) return sum;  // an a-parameter hit a non-positive integer
    sum += term;
    if (!std::isfinite(sum)) throw ConvergenceError("pFq partial sum overflowed");
    double r = std::abs(term_ratio(spec, k + 1));
    if (unit_radius && !terminating) r = std::max(r, std::abs(spec.z));
    if (r < 1.0) {
      const double tail = std::abs(term) * r / (1.0 - r);
      if (tail <= rel_tol * std::abs(sum)) return sum;
    }
  }
  throw ConvergenceError("pFq did not converge within " + std::to_string(max_terms) + " terms");
}

double erfi(double x) {
  if (x == 0.0 || std::isnan(x)) return x;
  const double ax = std::abs(x);
  if (ax <= kErfiSeriesLimit) return 2.0 / kSqrtPi * erfi_series_sum(x);
  const double mag = std::exp(ax * ax) / (ax * kSqrtPi) * erfi_asymptotic_sum(ax);
  return x < 0 ? -mag : mag;
}

double erfi_scaled(double x) {
  if (x == 0.0 || std::isnan(x)) return x;
  const double ax = std::abs(x);
  if (ax <= kErfiSeriesLimit) return std::exp(-x * x) * erfi(x);
  const double mag = erfi_asymptotic_sum(ax) / (ax * kSqrtPi);
  return x < 0 ? -mag : mag;
}

}  // namespace toa
