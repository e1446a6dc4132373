#pragma once

#include <string>

#include "toa/phase_series.hpp"
#include "toa/potential.hpp"

namespace toa {

enum class ArrivalStatus { arrived, non_classical_region, moving_away };

std::string to_string(ArrivalStatus s);

struct ClassicalTOAResult {
  /// NaN when status is non_classical_region.
  double value = 0.0;
  ArrivalStatus status = ArrivalStatus::arrived;
};

/// Classical arrival time at the origin,
///   -sgn(p) sqrt(mu/2) int_0^q dq' / sqrt(H(q,p) - V(q')),
/// by composite Gauss-Legendre. The radicand is sampled at 10 (deg + 1)
/// Chebyshev points of the path and at both endpoints first; a nonpositive
/// sample gives non_classical_region. A negative arrival time gives
/// moving_away with the value still reported. Throws DomainError at p = 0.
ClassicalTOAResult classical_toa_quadrature(const PolynomialPotential& v, double mu, double q, double p);

/// Grade-0 series T_{C,n} from the successive-approximation recurrence
///   T_{C,0} = -mu q / p,
///   T_{C,n} = -mu q / p + (mu / p) int_0^q V'(q') dT_{C,n-1}/dp (q', p) dq',
/// truncated at |m| <= k_max.
PhaseSeries successive_approximation(const PolynomialPotential& v, const Rational& mu, int n, int k_max);

/// Local time of arrival
///   -sum_k (-1)^k (2k-1)!!/k! mu^(k+1) p^(-2k-1) int_0^q (V(q) - V(q'))^k dq'
/// for all k with 2k + 1 <= k_max.
PhaseSeries ltoa_series(const PolynomialPotential& v, const Rational& mu, int k_max);

}  // namespace toa
