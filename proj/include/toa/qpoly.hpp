#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "toa/rational.hpp"

namespace toa {

/// Univariate polynomial in q with exact rational coefficients.
///
/// Index i of coeffs() is the coefficient of q^i. The representation is
/// canonical: no trailing zero coefficient, and the zero polynomial is the
/// empty list, so equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<Rational> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;

  QPoly derivative(unsigned order = 1) const;
  /// p(a q).
  QPoly scale_argument(const Rational& a) const;
  QPoly pow(unsigned k) const;

  double eval(double q) const;
  Rational eval(const Rational& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Antiderivative with zero constant term, i.e. the definite integral of p
/// from 0 to q.
QPoly poly_integrate_zero_to_q(const QPoly& p);

}  // namespace toa
