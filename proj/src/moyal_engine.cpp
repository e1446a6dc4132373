#include "toa/moyal_engine.hpp"

#include <string>

#include "toa/classical_toa.hpp"
#include "toa/errors.hpp"

namespace toa {

namespace {

// (-1)^j M (M+2) ... (M+2j-2) mu^j / j!
Rational shift_factor(int m, int j, const Rational& mu) {
  Rational c = 1;
  for (int i = 0; i < j; ++i) c *= Rational(-(m + 2 * i)) * mu / (i + 1);
  return c;
}

BiPoly potential_difference(const PolynomialPotential& v) {
  BiPoly d;
  const auto& c = v.poly().coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    d.add(static_cast<int>(i), 0, c[i]);
    d.add(0, static_cast<int>(i), -c[i]);
  }
  return d;
}

// Sources (1/p) c_r V^(2r+1)(q') d^(2r+1)tau_{n-r}/dp^(2r+1), keyed by |exponent|.
std::map<int, QPoly> correction_sources(const PolynomialPotential& v, int n, const PhaseSeries& prior) {
  std::map<int, QPoly> sources;
  const int k_max = prior.max_p_exponent();
  for (int r = 1; r <= n; ++r) {
    const QPoly dv = v.derivative(static_cast<unsigned>(2 * r + 1));
    if (dv.is_zero()) continue;
    Rational c = 1 / (Rational(Integer(1) << (2 * r)) * factorial(static_cast<unsigned>(2 * r + 1)));
    if (r % 2 == 1) c = -c;
    for (const auto& [m, poly] : prior.grade(n - r)) {
      const int magnitude = -m + 2 * r + 2;
      if (magnitude > k_max) continue;
      Integer falling = 1;
      for (int i = 0; i <= 2 * r; ++i) falling *= m - i;
      QPoly s = dv * poly;
      s *= c * Rational(falling);
      auto& slot = sources[magnitude];
      slot += s;
    }
  }
  return sources;
}

}  // namespace

std::map<int, BiPoly> exp_shift_apply(const PolynomialPotential& v, const Rational& mu,
                                      const std::map<int, QPoly>& terms, int k_max, int max_order) {
  const BiPoly dv = potential_difference(v);
  std::map<int, BiPoly> out;
  for (const auto& [m, s] : terms) {
    if (m <= 0) throw StructuralError("exp_shift_apply expects positive exponent magnitudes");
    BiPoly power;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) power.add(0, static_cast<int>(i), s.coeffs()[i]);
    for (int j = 0; m + 2 * j <= k_max && (max_order < 0 || j <= max_order); ++j) {
      if (j > 0) power = power * dv;
      BiPoly term = power * shift_factor(m, j, mu);
      if (!term.is_zero()) out[m + 2 * j] += term;
      if (dv.is_zero()) break;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

QPoly integrate_second_from_zero(const BiPoly& f) {
  std::vector<Rational> coeffs;
  for (const auto& [key, c] : f.terms()) {
    const std::size_t power = static_cast<std::size_t>(key.first + key.second + 1);
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c / (key.second + 1);
  }
  return QPoly(std::move(coeffs));
}

GradedSeries moyal_correction(const PolynomialPotential& v, const Rational& mu, int n, const PhaseSeries& prior) {
  if (n < 1) throw PreconditionError("correction grade must be >= 1");
  if (prior.max_grade() < n - 1 || prior.grade_empty(0)) {
    throw PreconditionError("prior series must contain grades 0.." + std::to_string(n - 1));
  }
  const int k_max = prior.max_p_exponent();
  GradedSeries out;
  for (const auto& [magnitude, s] : correction_sources(v, n, prior)) {
    const unsigned j_top = static_cast<unsigned>((k_max - magnitude) / 2);
    const auto integrals = weighted_difference_integrals(v, s, j_top);
    for (unsigned j = 0; j <= j_top; ++j) {
      const Rational c = mu * shift_factor(magnitude, static_cast<int>(j), mu);
      out.add(n, -(magnitude + 2 * static_cast<int>(j)), integrals[j] * c);
    }
  }
  return out;
}

PhaseSeries build_moyal_toa(const PolynomialPotential& v, const Rational& mu, int n_max, int k_max) {
  if (n_max < 0) throw PreconditionError("N_max must be >= 0");
  GradedSeries terms = ltoa_series(v, mu, k_max).terms();
  for (int n = 1; n <= n_max; ++n) {
    const PhaseSeries prior(terms, mu, n - 1, k_max);
    terms += moyal_correction(v, mu, n, prior);
  }
  for (const auto& [key, poly] : terms.terms()) {
    if (-key.second < v.min_abs_p_exponent(key.first)) {
      throw StructuralError("grade " + std::to_string(key.first) + " holds exponent " +
                            std::to_string(key.second) + " below its minimum magnitude");
    }
  }
  return PhaseSeries(std::move(terms), mu, n_max, k_max);
}

std::vector<BracketEntry> BracketReport::interior_residuals() const {
  std::vector<BracketEntry> out;
  for (const auto& e : residual_entries) {
    if (!boundary_orders.count({e.grade, e.exponent})) out.push_back(e);
  }
  return out;
}

BracketReport moyal_bracket(const PolynomialPotential& v, const PhaseSeries& t, int r_max) {
  if (r_max < 0) r_max = v.max_bracket_order();
  const GradedSeries& s = t.terms();
  const Rational& mu = t.mu();

  GradedSeries bracket = s.diff_p(1).times_poly(v.derivative(1));
  bracket -= s.diff_q(1).times_p_power(1) * (1 / mu);
  for (int r = 1; r <= r_max; ++r) {
    const QPoly dv = v.derivative(static_cast<unsigned>(2 * r + 1));
    if (dv.is_zero()) continue;
    Rational c = 1 / (Rational(Integer(1) << (2 * r)) * factorial(static_cast<unsigned>(2 * r + 1)));
    if (r % 2 == 1) c = -c;
    bracket += s.diff_p(static_cast<unsigned>(2 * r + 1)).times_poly(dv).shifted_grade(r) * c;
  }

  BracketReport report;
  report.constant_term = bracket.contains(0, 0) ? bracket.at(0, 0).coeff(0) : Rational(0);
  bracket.add(0, 0, QPoly::constant(-1));
  for (const auto& [key, poly] : bracket.terms()) {
    const bool boundary = key.first > t.max_grade() || -key.second + 1 > t.max_p_exponent();
    if (boundary) report.boundary_orders.insert(key);
    report.residual_entries.push_back({key.first, key.second, poly});
  }
  report.pass = report.constant_term == 1 && report.interior_residuals().empty();
  return report;
}

bool check_time_reversal(const GradedSeries& t) {
  for (const auto& [key, poly] : t.terms()) {
    if (key.second % 2 == 0) return false;
  }
  return true;
}

bool check_time_reversal(const PhaseSeries& t) { return check_time_reversal(t.terms()); }

}  // namespace toa
