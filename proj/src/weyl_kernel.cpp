#include "toa/weyl_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "toa/errors.hpp"
#include "toa/parallel.hpp"

namespace toa {

namespace {

// (-1)^((M+1)/2) / (2 mu (M-1)!)
Rational weyl_factor(int magnitude, const Rational& mu) {
  Rational f = 1 / (2 * mu * factorial(static_cast<unsigned>(magnitude - 1)));
  return ((magnitude + 1) / 2) % 2 == 0 ? f : Rational(-f);
}

const Rational kHalf(1, 2);

}  // namespace

KernelSeries::KernelSeries(std::vector<BiPoly> grades, Rational mu, int n_max, int k_max)
    : grades_(std::move(grades)), mu_(std::move(mu)), n_max_(n_max), k_max_(k_max) {
  if (n_max < 0 || k_max < 1) throw PreconditionError("kernel cutoffs must satisfy N_max >= 0, K_max >= 1");
  if (grades_.size() > static_cast<std::size_t>(n_max) + 1) {
    throw StructuralError("kernel series has more grades than N_max allows");
  }
  grades_.resize(static_cast<std::size_t>(n_max) + 1);
}

double KernelSeries::grade_value(int n, double q, double qprime, double hbar) const {
  return std::pow(hbar, 2 * n) * grade(n).eval(q + qprime, (q - qprime) / hbar);
}

double KernelSeries::value(double q, double qprime, double hbar) const {
  double total = 0.0;
  for (int n = 0; n <= n_max_; ++n) total += grade_value(n, q, qprime, hbar);
  return total;
}

KernelSeries weyl_map_series(const PhaseSeries& t) {
  std::vector<BiPoly> grades(static_cast<std::size_t>(t.max_grade()) + 1);
  for (const auto& [key, poly] : t.terms().terms()) {
    const int magnitude = -key.second;
    if (magnitude <= 0 || magnitude % 2 == 0) {
      throw StructuralError("Weyl map needs odd negative p-exponents, got " + std::to_string(key.second));
    }
    grades[static_cast<std::size_t>(key.first)].add_column(poly.scale_argument(kHalf), magnitude - 1,
                                                           weyl_factor(magnitude, t.mu()));
  }
  return KernelSeries(std::move(grades), t.mu(), t.max_grade(), t.max_p_exponent());
}

PhaseSeries inverse_weyl_roundtrip(const KernelSeries& k) {
  GradedSeries out;
  for (int n = 0; n <= k.max_grade(); ++n) {
    const BiPoly& b = k.grade(n);
    std::set<int> powers;
    for (const auto& [key, c] : b.terms()) {
      if (key.second % 2 != 0) {
        throw StructuralError("kernel grade " + std::to_string(n) + " has odd power nu^" +
                              std::to_string(key.second) + " with no phase-space preimage");
      }
      powers.insert(key.second);
    }
    for (int d : powers) {
      const int magnitude = d + 1;
      out.add(n, -magnitude, b.column(d).scale_argument(Rational(2)) * (1 / weyl_factor(magnitude, k.mu())));
    }
  }
  return PhaseSeries(std::move(out), k.mu(), k.max_grade(), k.max_p_exponent());
}

bool TkeSeriesReport::interior_zero() const {
  return std::all_of(interior.begin(), interior.end(), [](const BiPoly& b) { return b.is_zero(); });
}

double TkeSeriesReport::max_abs_interior() const {
  double m = 0.0;
  for (const auto& b : interior) {
    for (const auto& [key, c] : b.terms()) m = std::max(m, std::abs(to_double(c)));
  }
  return m;
}

TkeSeriesReport tke_residual(const KernelSeries& k, const PolynomialPotential& v) {
  TkeSeriesReport report;
  const int interior_limit = k.max_p_exponent() - 2;
  for (int n = 0; n <= k.max_grade(); ++n) {
    BiPoly residual = k.grade(n).diff_x(1).diff_y(1) * (2 / k.mu());
    for (int r = 0; r <= n; ++r) {
      const QPoly dv = v.derivative(static_cast<unsigned>(2 * r + 1));
      if (dv.is_zero()) continue;
      BiPoly factor;
      factor.add_column(dv.scale_argument(kHalf), 2 * r + 1,
                        1 / (Rational(Integer(1) << (2 * r)) * factorial(static_cast<unsigned>(2 * r + 1))));
      residual -= factor * k.grade(n - r);
    }
    BiPoly interior;
    BiPoly frontier;
    for (const auto& [key, c] : residual.terms()) {
      (key.second <= interior_limit ? interior : frontier).add(key.first, key.second, c);
    }
    report.interior.push_back(std::move(interior));
    report.frontier.push_back(std::move(frontier));
  }
  return report;
}

KernelBoundaryReport check_kernel_boundaries(const KernelSeries& k) {
  KernelBoundaryReport r;
  r.diagonal_ok = r.antidiagonal_ok = r.symmetric_ok = true;
  for (int n = 0; n <= k.max_grade(); ++n) {
    const BiPoly& b = k.grade(n);
    const QPoly expected = n == 0 ? QPoly::monomial(Rational(1, 4), 1) : QPoly();
    r.diagonal_ok = r.diagonal_ok && b.at_y_zero() == expected;
    r.antidiagonal_ok = r.antidiagonal_ok && b.at_x_zero().is_zero();
    r.symmetric_ok = r.symmetric_ok && b.is_even_in_y();
  }
  return r;
}

std::string to_string(KernelRoute r) { return r == KernelRoute::series ? "series" : "quadrature"; }

KernelGrid sample_kernel_series(const KernelSeries& k, double hbar, const std::vector<double>& q_nodes,
                                const std::vector<double>& qp_nodes, int grade) {
  KernelGrid grid{q_nodes, qp_nodes, {}, grade, KernelRoute::series};
  grid.values.assign(q_nodes.size(), std::vector<double>(qp_nodes.size()));
  parallel_for(q_nodes.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < qp_nodes.size(); ++j) {
      grid.values[i][j] = grade == kAllGrades ? k.value(q_nodes[i], qp_nodes[j], hbar)
                                              : k.grade_value(grade, q_nodes[i], qp_nodes[j], hbar);
    }
  });
  return grid;
}

double tke_residual(const KernelGrid& grid, const PolynomialPotential& v, double mu, double hbar) {
  const auto& qs = grid.q_nodes;
  const auto& ps = grid.qp_nodes;
  if (qs.size() < 5 || ps.size() < 5) throw PreconditionError("TKE grid needs at least 3 interior nodes per axis");
  const double h = qs[1] - qs[0];
  const auto uniform = [h](const std::vector<double>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (std::abs((xs[i] - xs[i - 1]) - h) > 1e-9 * std::abs(h)) return false;
    }
    return true;
  };
  if (!(h > 0) || !uniform(qs) || !uniform(ps)) {
    throw PreconditionError("TKE grid must be uniform with equal positive steps on both axes");
  }
  const double c = hbar * hbar / (2.0 * mu * h * h);
  const auto& t = grid.values;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < qs.size(); ++i) {
    for (std::size_t j = 1; j + 1 < ps.size(); ++j) {
      const double tqq = t[i + 1][j] - 2.0 * t[i][j] + t[i - 1][j];
      const double tpp = t[i][j + 1] - 2.0 * t[i][j] + t[i][j - 1];
      const double res = -c * tqq + c * tpp + (v(qs[i]) - v(ps[j])) * t[i][j];
      worst = std::max(worst, std::abs(res));
    }
  }
  return worst;
}

}  // namespace toa
