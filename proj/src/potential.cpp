#include "toa/potential.hpp"

#include <algorithm>
#include <limits>

namespace toa {

int PolynomialPotential::max_bracket_order() const {
  const int d = poly_.degree();
  return d >= 3 ? (d - 1) / 2 : 0;
}

int PolynomialPotential::min_abs_p_exponent(int grade) const {
  constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;
  if (grade < 0) return kUnreachable;
  std::vector<int> bound(static_cast<std::size_t>(grade) + 1, kUnreachable);
  bound[0] = 1;
  for (int n = 1; n <= grade; ++n) {
    for (int r = 1; r <= n; ++r) {
      if (derivative(static_cast<unsigned>(2 * r + 1)).is_zero()) continue;
      const int prev = bound[static_cast<std::size_t>(n - r)];
      if (prev >= kUnreachable) continue;
      bound[static_cast<std::size_t>(n)] = std::min(bound[static_cast<std::size_t>(n)], prev + 2 * r + 2);
    }
  }
  return bound[static_cast<std::size_t>(grade)];
}

std::vector<QPoly> weighted_difference_integrals(const PolynomialPotential& v, const QPoly& s,
                                                 unsigned max_power) {
  // (V(q) - V(q'))^j = sum_a C(j,a) V(q)^a (-V(q'))^(j-a), so each integral is
  // sum_a C(j,a) (-1)^(j-a) V(q)^a I_{j-a} with I_i = int_0^q V^i s dq'.
  const QPoly& vp = v.poly();
  std::vector<QPoly> moments;
  moments.reserve(max_power + 1);
  QPoly integrand = s;
  for (unsigned i = 0; i <= max_power; ++i) {
    if (i > 0) integrand = integrand * vp;
    moments.push_back(poly_integrate_zero_to_q(integrand));
  }
  std::vector<QPoly> out;
  out.reserve(max_power + 1);
  for (unsigned j = 0; j <= max_power; ++j) {
    QPoly acc;
    for (int a = static_cast<int>(j); a >= 0; --a) {
      const unsigned ua = static_cast<unsigned>(a);
      Rational c = binomial(j, ua);
      if ((j - ua) % 2 == 1) c = -c;
      acc = acc * vp + moments[j - ua] * c;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

QPoly potential_difference_power(const PolynomialPotential& v, unsigned k) {
  return weighted_difference_integrals(v, QPoly::constant(1), k)[k];
}

}  // namespace toa
