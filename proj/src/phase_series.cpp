#include "toa/phase_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "toa/errors.hpp"

namespace toa {

namespace {

const QPoly& zero_poly() {
  static const QPoly z;
  return z;
}

double int_power(double x, int k) {
  double r = 1.0;
  const bool inv = k < 0;
  unsigned e = static_cast<unsigned>(inv ? -k : k);
  double b = x;
  while (e > 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return inv ? 1.0 / r : r;
}

double horner(const std::vector<double>& c, double q) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  return acc;
}

}  // namespace

void GradedSeries::add(int grade, int exponent, const QPoly& poly) {
  if (poly.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({grade, exponent}, poly);
  if (!inserted) {
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const QPoly& GradedSeries::at(int grade, int exponent) const {
  auto it = terms_.find({grade, exponent});
  return it == terms_.end() ? zero_poly() : it->second;
}

void GradedSeries::erase_grade(int grade) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->first.first == grade ? terms_.erase(it) : std::next(it);
  }
}

int GradedSeries::max_grade() const {
  int g = -1;
  for (const auto& [key, poly] : terms_) g = std::max(g, key.first);
  return g;
}

GradedSeries GradedSeries::diff_q(unsigned order) const {
  GradedSeries out;
  for (const auto& [key, poly] : terms_) out.add(key.first, key.second, poly.derivative(order));
  return out;
}

GradedSeries GradedSeries::diff_p(unsigned order) const {
  GradedSeries out;
  for (const auto& [key, poly] : terms_) {
    Integer falling = 1;
    for (unsigned j = 0; j < order; ++j) falling *= key.second - static_cast<int>(j);
    if (falling == 0) continue;
    out.add(key.first, key.second - static_cast<int>(order), poly * Rational(falling));
  }
  return out;
}

GradedSeries GradedSeries::times_p_power(int k) const {
  GradedSeries out;
  for (const auto& [key, poly] : terms_) out.terms_.emplace(Key{key.first, key.second + k}, poly);
  return out;
}

GradedSeries GradedSeries::times_poly(const QPoly& poly) const {
  GradedSeries out;
  for (const auto& [key, c] : terms_) out.add(key.first, key.second, c * poly);
  return out;
}

GradedSeries GradedSeries::shifted_grade(int delta) const {
  GradedSeries out;
  for (const auto& [key, poly] : terms_) out.terms_.emplace(Key{key.first + delta, key.second}, poly);
  return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  for (const auto& [key, poly] : o.terms_) add(key.first, key.second, poly);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  for (const auto& [key, poly] : o.terms_) add(key.first, key.second, -poly);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, poly] : terms_) poly *= c;
  return *this;
}

double GradedSeries::eval(double q, double p, double hbar) const {
  double total = 0.0;
  for (const auto& [key, poly] : terms_) {
    total += int_power(hbar, 2 * key.first) * poly.eval(q) * int_power(p, key.second);
  }
  return total;
}

PhaseSeries::PhaseSeries(GradedSeries terms, Rational mu, int n_max, int k_max)
    : terms_(std::move(terms)), mu_(std::move(mu)), n_max_(n_max), k_max_(k_max) {
  if (n_max_ < 0 || k_max_ < 1) throw PreconditionError("PhaseSeries cutoffs must satisfy N_max >= 0, K_max >= 1");
  for (const auto& [key, poly] : terms_.terms()) {
    const auto [n, m] = key;
    if (m >= 0 || std::abs(m) % 2 != 1) {
      throw StructuralError("PhaseSeries entry with p-exponent " + std::to_string(m) +
                            " (only odd negative exponents are allowed)");
    }
    if (n < 0 || n > n_max_ || -m > k_max_) {
      throw StructuralError("PhaseSeries entry (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") lies outside the cutoffs");
    }
  }
}

std::vector<std::pair<int, QPoly>> PhaseSeries::grade(int n) const {
  std::vector<std::pair<int, QPoly>> out;
  for (const auto& [key, poly] : terms_.terms()) {
    if (key.first == n) out.emplace_back(key.second, poly);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool PhaseSeries::grade_empty(int n) const {
  for (const auto& [key, poly] : terms_.terms()) {
    if (key.first == n) return false;
  }
  return true;
}

PhaseSeries PhaseSeries::without_grade(int n) const {
  GradedSeries t = terms_;
  t.erase_grade(n);
  return PhaseSeries(std::move(t), mu_, n_max_, k_max_);
}

PhaseSeries PhaseSeries::truncated(int n_max, int k_max) const {
  GradedSeries t;
  for (const auto& [key, poly] : terms_.terms()) {
    if (key.first <= n_max && -key.second <= k_max) t.add(key.first, key.second, poly);
  }
  return PhaseSeries(std::move(t), mu_, n_max, k_max);
}

GradedSeries series_diff(const PhaseSeries& s, Variable var, unsigned order) {
  if (order < 1) throw PreconditionError("series_diff order must be >= 1");
  return var == Variable::q ? s.terms().diff_q(order) : s.terms().diff_p(order);
}

double series_eval(const PhaseSeries& s, double q, double p, double hbar) {
  if (p == 0.0) throw DomainError("momentum singularity: p = 0 never arrives");
  return SeriesEvaluator(s)(q, p, hbar);
}

double grade_eval(const PhaseSeries& s, int n, double q, double p) {
  if (p == 0.0) throw DomainError("momentum singularity: p = 0 never arrives");
  return SeriesEvaluator(s).grade(n, q, p);
}

SeriesEvaluator::SeriesEvaluator(const PhaseSeries& s) {
  for (const auto& [key, poly] : s.terms().terms()) {
    Term t{key.first, key.second, {}};
    t.coeffs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) t.coeffs.push_back(c.get_d());
    terms_.push_back(std::move(t));
  }
}

double SeriesEvaluator::operator()(double q, double p, double hbar) const {
  double total = 0.0;
  for (const auto& t : terms_) {
    total += int_power(hbar, 2 * t.grade) * horner(t.coeffs, q) * int_power(p, t.exponent);
  }
  return total;
}

double SeriesEvaluator::grade(int n, double q, double p) const {
  double total = 0.0;
  for (const auto& t : terms_) {
    if (t.grade == n) total += horner(t.coeffs, q) * int_power(p, t.exponent);
  }
  return total;
}

}  // namespace toa
