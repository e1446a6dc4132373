#pragma once

#include <map>
#include <utility>
#include <vector>

#include "toa/qpoly.hpp"

namespace toa {

/// Sparse sum over (hbar^2-grade n, p-exponent m) of c_{n,m}(q) p^m.
///
/// This is the unrestricted working representation: any integer exponent
/// may appear (derivatives and bracket terms produce even ones). Zero
/// polynomials are never stored, so "structurally zero" means empty().
class GradedSeries {
 public:
  using Key = std::pair<int, int>;  // (grade, p-exponent)
  using Map = std::map<Key, QPoly>;

  GradedSeries() = default;

  void add(int grade, int exponent, const QPoly& poly);
  const QPoly& at(int grade, int exponent) const;
  bool contains(int grade, int exponent) const { return terms_.count({grade, exponent}) > 0; }
  void erase_grade(int grade);

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest grade present; -1 when empty.
  int max_grade() const;

  GradedSeries diff_q(unsigned order = 1) const;
  GradedSeries diff_p(unsigned order = 1) const;
  /// Multiplies every term by p^k.
  GradedSeries times_p_power(int k) const;
  GradedSeries times_poly(const QPoly& poly) const;
  GradedSeries shifted_grade(int delta) const;

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const Rational& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.terms_ == b.terms_; }

  /// sum_n hbar^(2n) sum_m c_{n,m}(q) p^m in double precision.
  double eval(double q, double p, double hbar) const;

 private:
  Map terms_;
};

/// Time-of-arrival phase-space series sum_n hbar^(2n) tau_n(q, p).
///
/// Every stored exponent is odd and negative (the series is odd under
/// p -> -p), grades lie in [0, n_max] and |m| <= k_max. Construction checks
/// all three and throws StructuralError otherwise.
class PhaseSeries {
 public:
  static constexpr int kDefaultMaxGrade = 3;
  static constexpr int kDefaultMaxPExponent = 21;

  PhaseSeries(GradedSeries terms, Rational mu, int n_max, int k_max);

  const GradedSeries& terms() const { return terms_; }
  const Rational& mu() const { return mu_; }
  int max_grade() const { return n_max_; }
  int max_p_exponent() const { return k_max_; }

  /// Entries of one grade as (exponent, polynomial), exponents descending
  /// in magnitude order -1, -3, ...
  std::vector<std::pair<int, QPoly>> grade(int n) const;
  const QPoly& entry(int n, int m) const { return terms_.at(n, m); }
  bool grade_empty(int n) const;

  /// Copy with grade n removed (used for negative controls).
  PhaseSeries without_grade(int n) const;
  /// Copy truncated to tighter cutoffs.
  PhaseSeries truncated(int n_max, int k_max) const;

  friend bool operator==(const PhaseSeries& a, const PhaseSeries& b) {
    return a.terms_ == b.terms_ && a.mu_ == b.mu_;
  }

 private:
  GradedSeries terms_;
  Rational mu_;
  int n_max_;
  int k_max_;
};

enum class Variable { q, p };

/// Term-wise exact derivative. Odd-order p-derivatives of a PhaseSeries
/// produce even exponents, so the result is a GradedSeries.
GradedSeries series_diff(const PhaseSeries& s, Variable var, unsigned order);

/// Numeric value of the series at (q, p). Throws DomainError at p = 0.
double series_eval(const PhaseSeries& s, double q, double p, double hbar);

/// Value of the single grade tau_n(q, p), without the hbar^(2n) factor.
double grade_eval(const PhaseSeries& s, int n, double q, double p);

/// Double-precision copy of a PhaseSeries for repeated evaluation.
class SeriesEvaluator {
 public:
  explicit SeriesEvaluator(const PhaseSeries& s);
  double operator()(double q, double p, double hbar) const;
  double grade(int n, double q, double p) const;

 private:
  struct Term {
    int grade;
    int exponent;
    std::vector<double> coeffs;
  };
  std::vector<Term> terms_;
};

}  // namespace toa
