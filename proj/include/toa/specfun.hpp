#pragma once

#include <cstddef>
#include <vector>

namespace toa {

/// Parameters of pFq(a_1..a_p; b_1..b_q; z).
struct HypergeomSpec {
  std::vector<double> a_params;
  std::vector<double> b_params;
  double z = 0.0;
};

inline constexpr double kDefaultSpecfunTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxSeriesTerms = 100000;

/// Generalized hypergeometric function by direct summation of
///   sum_k z^k prod (a)_k / (prod (b)_k k!).
///
/// Summation stops once a geometric bound on the remaining tail falls below
/// rel_tol times the partial sum. No analytic continuation is attempted:
/// p = q + 1 with |z| >= 1 and p > q + 1 with z != 0 throw DomainError; a
/// b-parameter that is a non-positive integer throws PreconditionError;
/// exhausting max_terms throws ConvergenceError.
double hyp_pfq(const HypergeomSpec& spec, double rel_tol = kDefaultSpecfunTolerance,
               std::size_t max_terms = kDefaultMaxSeriesTerms);

/// Imaginary error function erfi(x) = (2/sqrt(pi)) int_0^x exp(t^2) dt.
double erfi(double x);

/// exp(-x^2) erfi(x), finite for every finite x.
double erfi_scaled(double x);

}  // namespace toa
