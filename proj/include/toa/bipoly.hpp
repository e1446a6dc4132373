#pragma once

#include <map>
#include <utility>

#include "toa/qpoly.hpp"

namespace toa {

/// Bivariate polynomial sum c_{a,b} x^a y^b with exact rational
/// coefficients; zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Rational>;

  BiPoly() = default;

  void add(int px, int py, const Rational& c);
  Rational coeff(int px, int py) const;
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds poly(x) * c * y^py.
  void add_column(const QPoly& poly_in_x, int py, const Rational& c);

  BiPoly diff_x(unsigned order = 1) const;
  BiPoly diff_y(unsigned order = 1) const;
  /// The polynomial in x multiplying y^py.
  QPoly column(int py) const;
  int max_y_degree() const;

  bool is_even_in_y() const;
  /// p(x, 0) and p(0, y) as univariate polynomials.
  QPoly at_y_zero() const { return column(0); }
  QPoly at_x_zero() const;

  double eval(double x, double y) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace toa
