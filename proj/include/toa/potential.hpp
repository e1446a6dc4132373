#pragma once

#include <vector>

#include "toa/qpoly.hpp"

namespace toa {

/// V(q) = a_0 + a_1 q + ... + a_d q^d with exact rational coefficients.
class PolynomialPotential {
 public:
  PolynomialPotential() = default;
  explicit PolynomialPotential(QPoly poly) : poly_(std::move(poly)) {}
  explicit PolynomialPotential(std::vector<Rational> coeffs) : poly_(std::move(coeffs)) {}

  const QPoly& poly() const { return poly_; }
  /// Degree of the last nonzero coefficient; 0 for the zero potential.
  int degree() const { return poly_.degree() < 0 ? 0 : poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  /// True iff a_n = 0 for all n >= 3 (no quantum corrections exist).
  bool is_linear_system() const { return poly_.degree() <= 2; }

  QPoly derivative(unsigned order) const { return poly_.derivative(order); }
  double operator()(double q) const { return poly_.eval(q); }

  /// Largest r for which the (2r+1)-th derivative is nonzero (0 if none).
  int max_bracket_order() const;

  /// Lower bound on |m| for p^m entries at hbar^2-grade n of the Moyal time
  /// of arrival built from this potential. Equals 4n+1 whenever the fifth
  /// and higher odd derivatives vanish; grades that cannot be populated at
  /// all return a value larger than any cutoff.
  int min_abs_p_exponent(int grade) const;

 private:
  QPoly poly_;
};

/// Integral from 0 to q of (V(q) - V(q'))^k dq', as a polynomial in q.
QPoly potential_difference_power(const PolynomialPotential& v, unsigned k);

/// Integrals from 0 to q of (V(q) - V(q'))^j s(q') dq' for j = 0..max_power.
std::vector<QPoly> weighted_difference_integrals(const PolynomialPotential& v, const QPoly& s,
                                                 unsigned max_power);

}  // namespace toa
