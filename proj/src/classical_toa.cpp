#include "toa/classical_toa.hpp"

#include <cmath>
#include <limits>

#include "toa/errors.hpp"
#include "toa/quadrature.hpp"

namespace toa {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kNodes = 64;
constexpr int kPanels = 16;

}  // namespace

std::string to_string(ArrivalStatus s) {
  switch (s) {
    case ArrivalStatus::arrived:
      return "arrived";
    case ArrivalStatus::non_classical_region:
      return "non-classical-region";
    case ArrivalStatus::moving_away:
      return "moving-away";
  }
  return "unknown";
}

ClassicalTOAResult classical_toa_quadrature(const PolynomialPotential& v, double mu, double q, double p) {
  if (p == 0.0) throw DomainError("momentum singularity: p = 0 never arrives");
  if (q == 0.0) return {0.0, ArrivalStatus::arrived};
  const double energy = p * p / (2.0 * mu) + v(q);
  const auto radicand = [&](double x) { return energy - v(x); };

  const double lo = std::min(0.0, q);
  const double hi = std::max(0.0, q);
  const int samples = 10 * (v.degree() + 1);
  bool classical = radicand(lo) > 0.0 && radicand(hi) > 0.0;
  for (int i = 0; classical && i < samples; ++i) {
    const double t = std::cos(kPi * (i + 0.5) / samples);
    classical = radicand(0.5 * (lo + hi) + 0.5 * (hi - lo) * t) > 0.0;
  }
  if (!classical) return {std::numeric_limits<double>::quiet_NaN(), ArrivalStatus::non_classical_region};

  QuadratureSpec spec;
  spec.node_count = kNodes;
  spec.panels = kPanels;
  spec.lower = 0.0;
  spec.upper = q;
  const double integral = integrate([&](double x) { return 1.0 / std::sqrt(radicand(x)); }, spec);
  const double value = -(p > 0 ? 1.0 : -1.0) * std::sqrt(mu / 2.0) * integral;
  return {value, value < 0.0 ? ArrivalStatus::moving_away : ArrivalStatus::arrived};
}

PhaseSeries successive_approximation(const PolynomialPotential& v, const Rational& mu, int n, int k_max) {
  if (n < 0) throw PreconditionError("successive approximation order must be >= 0");
  if (k_max < 1) throw PreconditionError("K_max must be >= 1");
  GradedSeries free;
  free.add(0, -1, QPoly::monomial(-mu, 1));
  const QPoly dv = v.derivative(1);
  GradedSeries current = free;
  for (int step = 1; step <= n; ++step) {
    GradedSeries next = free;
    const GradedSeries derivative = current.diff_p(1);
    for (const auto& [key, poly] : derivative.terms()) {
      const int exponent = key.second - 1;
      if (-exponent > k_max) continue;
      next.add(0, exponent, poly_integrate_zero_to_q(dv * poly) * mu);
    }
    current = std::move(next);
  }
  return PhaseSeries(std::move(current), mu, 0, k_max);
}

PhaseSeries ltoa_series(const PolynomialPotential& v, const Rational& mu, int k_max) {
  if (k_max < 1) throw PreconditionError("K_max must be >= 1");
  const unsigned k_top = static_cast<unsigned>((k_max - 1) / 2);
  const auto integrals = weighted_difference_integrals(v, QPoly::constant(1), k_top);
  GradedSeries out;
  Rational mu_power = mu;
  for (unsigned k = 0; k <= k_top; ++k) {
    Rational c = double_factorial_odd(static_cast<int>(k)) / factorial(k) * mu_power;
    if (k % 2 == 0) c = -c;
    out.add(0, -static_cast<int>(2 * k + 1), integrals[k] * c);
    mu_power *= mu;
  }
  return PhaseSeries(std::move(out), mu, 0, k_max);
}

}  // namespace toa
