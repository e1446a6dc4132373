#pragma once

// Independent reference computations used only by the tests. Each one takes
// a different route from the library code it checks.

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "toa/bipoly.hpp"
#include "toa/phase_series.hpp"
#include "toa/potential.hpp"

namespace oracle {

using toa::BiPoly;
using toa::GradedSeries;
using toa::QPoly;
using toa::Rational;

/// V(x) - V(y) as a bivariate polynomial.
inline BiPoly potential_difference(const toa::PolynomialPotential& v) {
  BiPoly d;
  const auto& c = v.poly().coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    d.add(static_cast<int>(i), 0, c[i]);
    d.add(0, static_cast<int>(i), -c[i]);
  }
  return d;
}

/// int_0^x f(x, y) dy, integrating monomial by monomial.
inline QPoly integrate_y(const BiPoly& f) {
  QPoly out;
  for (const auto& [key, c] : f.terms()) {
    out += QPoly::monomial(c / (key.second + 1), static_cast<std::size_t>(key.first + key.second + 1));
  }
  return out;
}

/// int_0^q (V(q) - V(q'))^k dq' by repeated bivariate multiplication.
inline QPoly difference_power_integral(const toa::PolynomialPotential& v, unsigned k) {
  BiPoly p;
  p.add(0, 0, 1);
  const BiPoly d = potential_difference(v);
  for (unsigned i = 0; i < k; ++i) p = p * d;
  return integrate_y(p);
}

/// Derivative in p applied one power-rule step at a time.
inline GradedSeries diff_p_stepwise(const GradedSeries& s, unsigned order) {
  GradedSeries cur = s;
  for (unsigned i = 0; i < order; ++i) {
    GradedSeries next;
    for (const auto& [key, poly] : cur.terms()) {
      if (key.second != 0) next.add(key.first, key.second - 1, poly * Rational(key.second));
    }
    cur = next;
  }
  return cur;
}

/// Plain double sum of the series, term by term with std::pow.
inline double term_sum(const GradedSeries& s, double q, double p, double hbar) {
  double total = 0.0;
  for (const auto& [key, poly] : s.terms()) {
    double c = 0.0;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) c += toa::to_double(poly.coeffs()[i]) * std::pow(q, i);
    total += std::pow(hbar, 2 * key.first) * c * std::pow(p, key.second);
  }
  return total;
}

/// Direct partial sums of pFq with a fixed number of terms.
inline double pfq_fixed_terms(const std::vector<double>& a, const std::vector<double>& b, double z, int terms) {
  double t = 1.0;
  double s = 1.0;
  for (int k = 0; k + 1 < terms; ++k) {
    for (double x : a) t *= x + k;
    for (double x : b) t /= x + k;
    t *= z / (k + 1);
    s += t;
  }
  return s;
}

/// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int depth = 50) {
  const auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };
  const std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps, int d) {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid);
        const double rm = 0.5 * (mid + hi);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = simpson(lo, mid, flo, flm, fmid);
        const double right = simpson(mid, hi, fmid, frm, fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
        return rec(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) + rec(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
      };
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return rec(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

/// Fully general truncated Moyal bracket of H = p^2/(2 mu) + V(q) with T,
///   sum_{j,k} (hbar/2)^(j+k) (-1)^k / (j! k!) (d_q^j d_p^k H)(d_p^j d_q^k T),
/// obtained by expanding (2/hbar) H sin((hbar/2)(<-d_q ->d_p - <-d_p ->d_q)) T
/// with every derivative of H kept. Output grades count powers of hbar^2.
inline GradedSeries general_moyal_bracket(const toa::PolynomialPotential& v, const Rational& mu,
                                            const GradedSeries& t, int max_order) {
  GradedSeries out;
  // Derivatives of H: d_q^j d_p^k H is nonzero for (j>=1,k=0): V^(j);
  // (0,1): p/mu; (0,2): 1/mu.
  for (int j = 0; j <= max_order; ++j) {
    for (int k = 0; j + k <= max_order; ++k) {
      if (j + k == 0) continue;
      const int order = j + k;
      if (order % 2 == 0) continue;  // sine keeps odd total orders only
      GradedSeries hterm;
      if (k == 0) {
        const QPoly dv = v.derivative(static_cast<unsigned>(j));
        if (dv.is_zero()) continue;
        hterm.add(0, 0, dv);
      } else if (j == 0 && k == 1) {
        hterm.add(0, 1, QPoly::constant(1 / mu));
      } else if (j == 0 && k == 2) {
        hterm.add(0, 0, QPoly::constant(1 / mu));
      } else {
        continue;
      }
      // sin(x) = sum (-1)^s x^(2s+1)/(2s+1)!, x = (hbar/2)(A - B), with
      // A = <-d_q ->d_p and B = <-d_p ->d_q; binomial term C(order, k) A^j (-B)^k.
      const int s = (order - 1) / 2;
      Rational c = toa::binomial(static_cast<unsigned>(order), static_cast<unsigned>(k)) /
                   toa::factorial(static_cast<unsigned>(order));
      if (s % 2 == 1) c = -c;
      if (k % 2 == 1) c = -c;
      c /= Rational(toa::Integer(1) << (order - 1));  // (1/2)^order * 2 from the 2/hbar prefactor
      GradedSeries tderiv = diff_p_stepwise(t, static_cast<unsigned>(j)).diff_q(static_cast<unsigned>(k));
      GradedSeries product;
      for (const auto& [hk, hp] : hterm.terms()) {
        for (const auto& [tk, tp] : tderiv.terms()) product.add(tk.first, tk.second + hk.second, hp * tp);
      }
      // hbar power: order - 1 (the 2/hbar prefactor removes one).
      const int hpow = order - 1;
      out += product.shifted_grade(hpow / 2) * c;
    }
  }
  return out;
}

}  // namespace oracle
