#include "toa/expectation.hpp"

#include <algorithm>
#include <cmath>

#include "toa/errors.hpp"
#include "toa/parallel.hpp"
#include "toa/specfun.hpp"

namespace toa {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSpan = 12.0;
constexpr int kNodes = 64;
constexpr int kPanels = 8;

// max over q' in [0, q] of |V(q) - V(q')|, sampled at Chebyshev points.
double max_potential_drop(const PolynomialPotential& v, double q) {
  const int samples = 10 * (v.degree() + 1);
  const double vq = v(q);
  double worst = std::abs(vq - v(0.0));
  for (int i = 0; i < samples; ++i) {
    const double x = 0.5 * q * (1.0 + std::cos(kPi * (i + 0.5) / samples));
    worst = std::max(worst, std::abs(vq - v(x)));
  }
  return worst;
}

}  // namespace

void GaussianState::validate() const {
  if (!(sigma > 0) || !(hbar > 0) || !(mu > 0)) {
    throw PreconditionError("Gaussian state needs sigma, hbar and mu > 0");
  }
}

std::string to_string(ExpectationMethod m) {
  return m == ExpectationMethod::closed_form ? "closed-form" : "pv-quadrature";
}

double wigner_gaussian(const GaussianState& s, double q, double p) {
  const double dq = q - s.q0;
  const double dp = p - s.p0();
  return std::exp(-dq * dq / (2.0 * s.sigma * s.sigma)) *
         std::exp(-2.0 * s.sigma * s.sigma * dp * dp / (s.hbar * s.hbar)) / (kPi * s.hbar);
}

WignerGrid wigner_from_wavefunction(const std::vector<double>& x, const std::vector<std::complex<double>>& psi,
                                    const std::vector<double>& p_nodes, double hbar) {
  if (x.size() != psi.size() || x.size() < 3) {
    throw PreconditionError("wavefunction grid needs matching node and value lists of length >= 3");
  }
  if (!(hbar > 0)) throw PreconditionError("hbar must be positive");
  const double h = x[1] - x[0];
  WignerGrid grid{x, p_nodes, {}, 0.0};
  grid.values.assign(x.size(), std::vector<double>(p_nodes.size(), 0.0));
  const std::size_t n = x.size();
  parallel_for(n, [&](std::size_t i) {
    const std::size_t reach = std::min(i, n - 1 - i);
    for (std::size_t j = 0; j < p_nodes.size(); ++j) {
      double total = std::norm(psi[i]);
      for (std::size_t k = 1; k <= reach; ++k) {
        const double phase = 2.0 * p_nodes[j] * static_cast<double>(k) * h / hbar;
        // The k and -k terms are complex conjugates of each other.
        total += 2.0 * std::real(std::conj(psi[i + k]) * psi[i - k] * std::polar(1.0, phase));
      }
      grid.values[i][j] = h * total / (kPi * hbar);
    }
  });
  double peak = 0.0;
  for (const auto& v : psi) peak = std::max(peak, std::abs(v));
  if (peak > 0) grid.est_error = std::max(std::abs(psi.front()), std::abs(psi.back())) / peak;
  return grid;
}

ExpectationQuadrature default_quadrature(const GaussianState& s) {
  s.validate();
  const double sp = s.hbar / (2.0 * s.sigma);
  ExpectationQuadrature quad;
  quad.q_rule.rule = QuadratureRule::gauss_legendre;
  quad.q_rule.node_count = kNodes;
  quad.q_rule.panels = kPanels;
  quad.q_rule.lower = s.q0 - kSpan * s.sigma;
  quad.q_rule.upper = s.q0 + kSpan * s.sigma;
  quad.p_rule.rule = QuadratureRule::pv_symmetric;
  quad.p_rule.node_count = kNodes;
  quad.p_rule.panels = kPanels;
  quad.p_rule.lower = std::min(s.p0() - kSpan * sp, -sp);
  quad.p_rule.upper = std::max(s.p0() + kSpan * sp, sp);
  quad.p_rule.singularity = 0.0;
  return quad;
}

ExpectationResult toa_expectation(const PhaseFunction& t, const PhaseFunction& w, const ExpectationQuadrature& quad) {
  const auto points = quadrature_points(quad.q_rule);
  std::vector<double> values(points.size());
  std::vector<double> errors(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const double q = points[i].x;
    const auto inner = integrate_with_error([&](double p) { return t(q, p) * w(q, p); }, quad.p_rule);
    values[i] = points[i].w * inner.value;
    errors[i] = std::abs(points[i].w) * inner.est_error;
  });
  return {pairwise_sum(values), ExpectationMethod::pv_quadrature, pairwise_sum(errors), 0.0};
}

double quantum_factor(double k0_sigma) {
  const double x = std::sqrt(2.0) * k0_sigma;
  return std::sqrt(kPi) * x * erfi_scaled(x);
}

FreeToaClosedForm free_toa_closed_form(const GaussianState& s) {
  s.validate();
  FreeToaClosedForm out;
  if (s.k0 == 0.0) {
    out.factor_defined = false;
    return out;
  }
  out.classical = -s.mu * s.q0 / s.p0();
  out.quantum_factor = quantum_factor(s.k0 * s.sigma);
  out.value = out.classical * out.quantum_factor;
  return out;
}

ExpectationResult interacting_expectation(const PhaseSeries& t, const PolynomialPotential& v,
                                          const GaussianState& s) {
  const ExpectationQuadrature quad = default_quadrature(s);
  const SeriesEvaluator series(t);
  const auto points = quadrature_points(quad.q_rule);
  std::vector<double> values(points.size());
  std::vector<double> errors(points.size());
  std::vector<double> excluded(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const double q = points[i].x;
    const auto integrand = [&](double p) { return series(q, p, s.hbar) * wigner_gaussian(s, q, p); };
    const auto density = [&](double p) { return wigner_gaussian(s, q, p); };
    const double cut = std::sqrt(2.0 * s.mu * max_potential_drop(v, q));
    QuadratureSpec spec = quad.p_rule;
    double value = 0.0;
    double err = 0.0;
    double lost = 0.0;
    if (cut == 0.0) {
      const auto r = integrate_with_error(integrand, spec);
      value = r.value;
      err = r.est_error;
    } else {
      spec.rule = QuadratureRule::gauss_legendre;
      // Only |p| > cut converges; the momentum window always covers +-cut.
      const double lo = std::min(quad.p_rule.lower, -cut);
      const double hi = std::max(quad.p_rule.upper, cut);
      spec.lower = lo;
      spec.upper = -cut;
      value += integrate(integrand, spec);
      spec.lower = cut;
      spec.upper = hi;
      value += integrate(integrand, spec);
      spec.lower = -cut;
      spec.upper = cut;
      lost = integrate(density, spec);
    }
    values[i] = points[i].w * value;
    errors[i] = std::abs(points[i].w) * err;
    excluded[i] = points[i].w * lost;
  });
  return {pairwise_sum(values), ExpectationMethod::pv_quadrature, pairwise_sum(errors), pairwise_sum(excluded)};
}

}  // namespace toa
