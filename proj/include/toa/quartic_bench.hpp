#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toa/phase_series.hpp"
#include "toa/rational.hpp"

namespace toa {

/// V(q) = lambda q^4 with mass mu.
struct QuarticParams {
  double lambda = 1.0;
  double mu = 1.0;
  double hbar = 1.0;
  void validate() const;
};

/// z = -2 mu lambda q^4 / p^2. Throws DomainError at p = 0.
double quartic_z(const QuarticParams& params, double q, double p);

/// -(mu q/p) 2F1(1/2, 1; 5/4; z). Throws DomainError for |z| >= 1.
double quartic_classical(const QuarticParams& params, double q, double p);

/// -mu^2 lambda (q^3/p^5) hbar^2 [(5/2) 2F1(1, 7/2; 5/4; z) - (1/2) 2F1(1, 5/2; 7/4; z)].
double quartic_correction_1(const QuarticParams& params, double q, double p);

/// coefficient * pFq(a; b; z).
struct PfqTerm {
  Rational coefficient;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::string label() const;
};

/// Published hypergeometric lists for the second and third corrections:
///   T_2 = -mu^3 lambda^2 q^5 hbar^4 / p^9 * sum(terms),
///   T_3 = -mu^4 lambda^3 q^7 hbar^6 / p^13 * sum(terms).
const std::vector<PfqTerm>& correction_2_terms();
const std::vector<PfqTerm>& correction_3_terms();

struct TermValue {
  std::string label;
  double value = 0.0;  // coefficient * pFq(z), before the prefactor
};

struct CorrectionBreakdown {
  double prefactor = 0.0;
  std::vector<TermValue> terms;
  double total = 0.0;  // prefactor * sum of term values
};

/// Evaluates one published correction term by term. A pFq failure is
/// rethrown with the term index prepended.
CorrectionBreakdown quartic_correction_breakdown(int n, const QuarticParams& params, double q, double p);
double quartic_correction_2(const QuarticParams& params, double q, double p);
double quartic_correction_3(const QuarticParams& params, double q, double p);

/// Taylor coefficients of sum(terms) in z through z^order.
std::vector<Rational> pfq_series_coefficients(const std::vector<PfqTerm>& terms, int order);

/// Coefficients a_k of the engine's grade n written as
///   -mu^(n+1) lambda^n q^(2n+1) p^-(4n+1) sum_k a_k z^k.
/// Throws StructuralError if an entry is not a single monomial of that shape.
std::vector<Rational> engine_z_coefficients(const PhaseSeries& engine, int n, const Rational& mu,
                                            const Rational& lambda);

/// Grade-1 entries from the double sum
///   -(mu^2 lambda q^3 / (4 p^5)) sum_{k,l} (-mu lambda q^4)^(k+l) (2l+2) (2l+2k+3)!!
///        / ((5/4)_l (l+3/4)_(k+1)) p^(-2k-2l),   k + l <= max_order.
GradedSeries quartic_double_sum_grade1(const Rational& mu, const Rational& lambda, int max_order);

struct QuarticRow {
  double q = 0.0;
  double p = 0.0;
  std::string quantity;  // T_C, T_1, T_2, T_3
  double engine_value = 0.0;
  double closed_form_value = 0.0;
  double rel_dev = 0.0;
  std::string status;  // ok, mismatch, non-convergent
};

/// Tolerances used by quartic_report: 1e-8 for T_C and T_1, 1e-6 for T_2, T_3.
double quartic_tolerance(int n);

/// Engine (grades 0..3 of `engine`, weighted by hbar^(2n)) against the
/// closed forms at every grid point. Points with |z| >= 1 are rows with
/// status non-convergent and NaN values.
std::vector<QuarticRow> quartic_report(const QuarticParams& params, const std::vector<std::pair<double, double>>& grid,
                                       const PhaseSeries& engine);

}  // namespace toa
