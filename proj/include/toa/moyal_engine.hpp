#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "toa/bipoly.hpp"
#include "toa/phase_series.hpp"
#include "toa/potential.hpp"

namespace toa {

/// Expands exp[(V(q) - V(q')) (mu/p) d/dp] acting on sum_M s_M(q') p^(-M):
///   sum_j (V(q) - V(q'))^j mu^j / j! (-1)^j M (M+2) ... (M+2j-2) s_M(q') p^(-M-2j),
/// keeping orders M + 2j <= k_max (and j <= max_order when it is >= 0).
/// Keys of `terms` and of the result are the positive magnitudes M. Result
/// polynomials are in (x, y) = (q, q').
std::map<int, BiPoly> exp_shift_apply(const PolynomialPotential& v, const Rational& mu,
                                      const std::map<int, QPoly>& terms, int k_max, int max_order = -1);

/// int_0^x f(x, y) dy as a polynomial in x.
QPoly integrate_second_from_zero(const BiPoly& f);

/// Grade-n quantum correction tau_n. The result holds only grade-n entries.
/// prior must cover grades 0..n-1 (max_grade() >= n-1) with a nonempty
/// grade 0; its K_max is used as the p-cutoff. Throws PreconditionError
/// otherwise.
GradedSeries moyal_correction(const PolynomialPotential& v, const Rational& mu, int n, const PhaseSeries& prior);

/// tau_0 + sum_{n=1}^{n_max} hbar^(2n) tau_n, with tau_0 the local time of
/// arrival. Every grade is checked against the potential's minimum
/// |p|-exponent bound; a violation throws StructuralError.
PhaseSeries build_moyal_toa(const PolynomialPotential& v, const Rational& mu, int n_max, int k_max);

struct BracketEntry {
  int grade;
  int exponent;
  QPoly poly;
};

struct BracketReport {
  /// Coefficient of hbar^0 p^0 q^0 in {H, T}.
  Rational constant_term;
  /// Nonzero entries of {H, T} - 1.
  std::vector<BracketEntry> residual_entries;
  /// (grade, exponent) orders of {H, T} whose contributing terms are not all
  /// inside the series cutoffs.
  std::set<std::pair<int, int>> boundary_orders;
  bool pass = false;
  /// Residuals that sit at interior orders (a failure when nonempty).
  std::vector<BracketEntry> interior_residuals() const;
};

/// Moyal bracket {H, T}_MB for H = p^2/(2 mu) + V(q):
///   V' dT/dp - (p/mu) dT/dq
///     + sum_{r=1}^{r_max} (-1)^r / (2^(2r) (2r+1)!) hbar^(2r) V^(2r+1) d^(2r+1)T/dp^(2r+1).
/// r_max < 0 selects the largest r with a nonzero V^(2r+1).
BracketReport moyal_bracket(const PolynomialPotential& v, const PhaseSeries& t, int r_max = -1);

/// True iff every stored exponent is odd, i.e. T(q, -p) = -T(q, p).
bool check_time_reversal(const GradedSeries& t);
bool check_time_reversal(const PhaseSeries& t);

}  // namespace toa
