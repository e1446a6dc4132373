// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails. Lines starting with "finding:" are observations that
// do not change a criterion's status.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toa/classical_toa.hpp"
#include "toa/expectation.hpp"
#include "toa/moyal_engine.hpp"
#include "toa/quartic_bench.hpp"
#include "toa/weyl_kernel.hpp"

using namespace toa;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void finding(const std::string& text) {
  std::printf("finding: %s\n", text.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Case {
  std::string name;
  PolynomialPotential v;
};

PolynomialPotential mono(const Rational& c, std::size_t degree) { return PolynomialPotential(QPoly::monomial(c, degree)); }

std::vector<Case> conjugacy_family() {
  return {{"q^3", mono(Rational(2, 5), 3)},
          {"q^4", mono(Rational(-3, 4), 4)},
          {"q^3+q^4", PolynomialPotential(std::vector<Rational>{0, 0, 0, Rational(1, 2), Rational(5, 3)})},
          {"q^6", mono(Rational(1, 6), 6)}};
}

std::vector<Case> linear_family() {
  return {{"0", PolynomialPotential()},
          {"a+bq", PolynomialPotential(std::vector<Rational>{Rational(3, 2), Rational(-1, 4)})},
          {"a+bq+cq^2", PolynomialPotential(std::vector<Rational>{1, Rational(2, 3), Rational(-5, 7)})}};
}

const Rational kMu(7, 3);

void criterion1() {
  bool pass = true;
  std::ostringstream d;
  for (const auto& c : conjugacy_family()) {
    const BracketReport r = moyal_bracket(c.v, build_moyal_toa(c.v, kMu, 2, 13));
    bool confined = true;
    for (const auto& e : r.residual_entries) confined = confined && r.boundary_orders.count({e.grade, e.exponent});
    const bool ok = r.pass && r.constant_term == 1 && confined;
    pass = pass && ok;
    d << c.name << ":" << (ok ? "exact" : "residual") << "(" << r.boundary_orders.size() << " boundary) ";
  }
  report(1, pass, "N_max=2 K_max=13 " + d.str());
}

void criterion2() {
  bool pass = true;
  for (const auto& c : linear_family()) {
    const PhaseSeries t = build_moyal_toa(c.v, kMu, 3, 21);
    for (int n = 1; n <= 3; ++n) pass = pass && t.grade_empty(n);
    pass = pass && t == ltoa_series(c.v, kMu, 21) && moyal_bracket(c.v, t).pass;
  }
  report(2, pass, "corrections empty and engine == LTOA for V = 0, a+bq, a+bq+cq^2");
}

double free_pv(const GaussianState& s) {
  const auto t = [&](double q, double p) { return -s.mu * q / p; };
  const auto w = [&](double q, double p) { return wigner_gaussian(s, q, p); };
  return toa_expectation(t, w, default_quadrature(s)).value;
}

GaussianState gaussian(double q0, double k0, double sigma) {
  GaussianState s;
  s.q0 = q0;
  s.k0 = k0;
  s.sigma = sigma;
  return s;
}

void criterion3() {
  double worst = 0.0;
  for (double k0 : {1.0, 2.0, 2.5}) {
    for (double sigma : {1.0, 1.5, 2.0}) {
      const GaussianState s = gaussian(-10.0, k0, sigma);
      worst = std::max(worst, rel(free_pv(s), free_toa_closed_form(s).value));
    }
  }
  // Q from the quadrature route along k0 sigma = 1..5.
  std::vector<double> q;
  for (double x : {1.0, 2.0, 3.0, 4.0, 5.0}) q.push_back(free_pv(gaussian(-10.0, x, 1.0)) / (10.0 / x));
  bool approaches = true;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    approaches = approaches && std::abs(q[i + 1] - 1.0) < std::abs(q[i] - 1.0) && q[i] > 1.0;
  }
  report(3, worst < 1e-6 && approaches,
         "max rel dev " + fmt(worst) + " on 3x3 (k0, sigma); Q(1..5) = " + fmt(q[0]) + " " + fmt(q[1]) + " " +
             fmt(q[2]) + " " + fmt(q[3]) + " " + fmt(q[4]) + " -> 1 from above");
}

// mu = 3/2, lambda = 2/3, so z = -2 q^4 / p^2.
const Rational kQMu(3, 2);
const Rational kQLambda(2, 3);

QuarticParams quartic_params() {
  QuarticParams p;
  p.lambda = 2.0 / 3.0;
  p.mu = 1.5;
  return p;
}

std::vector<std::pair<double, double>> points_with_z(const std::vector<double>& zs) {
  std::vector<std::pair<double, double>> out;
  const double qs[] = {-0.7, 0.45, -1.1};
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double q = qs[i % 3];
    out.emplace_back(q, std::sqrt(2.0 * std::pow(q, 4) / zs[i]) * (i % 2 ? -1.0 : 1.0));
  }
  return out;
}

const PhaseSeries& quartic_engine() {
  static const PhaseSeries t = build_moyal_toa(mono(kQLambda, 4), kQMu, 3, 61);
  return t;
}

void criterion4() {
  const QuarticParams pr = quartic_params();
  double worst_quad = 0.0;
  for (const auto& [q, p] : points_with_z({0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.85, 0.95})) {
    worst_quad = std::max(worst_quad, rel(classical_toa_quadrature(mono(kQLambda, 4), pr.mu, q, p).value,
                                          quartic_classical(pr, q, p)));
  }
  const PhaseSeries ltoa = ltoa_series(mono(kQLambda, 4), kQMu, 41);
  double worst_series = 0.0;
  for (const auto& [q, p] : points_with_z({0.1, 0.2, 0.3})) {
    worst_series = std::max(worst_series, rel(series_eval(ltoa, q, p, 1.0), quartic_classical(pr, q, p)));
  }
  report(4, worst_quad < 1e-8 && worst_series < 1e-10,
         "2F1 vs quadrature max rel " + fmt(worst_quad) + " (9 points, |z| <= 0.95); vs LTOA k<=20 max rel " +
             fmt(worst_series) + " (|z| <= 0.3)");
}

void criterion5() {
  // Enough p-orders that truncation is negligible out to |z| = 0.7.
  const PhaseSeries engine = build_moyal_toa(mono(kQLambda, 4), kQMu, 1, 241);
  const bool leading = engine.entry(1, -5) == QPoly::monomial(Rational(-2) * kQMu * kQMu * kQLambda, 3);
  double worst = 0.0;
  for (const auto& [q, p] : points_with_z({0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7})) {
    worst = std::max(worst, rel(grade_eval(engine, 1, q, p), quartic_correction_1(quartic_params(), q, p)));
  }
  report(5, leading && worst < 1e-8,
         std::string("leading -2 mu^2 lambda q^3 p^-5 ") + (leading ? "exact" : "WRONG") + "; max rel " + fmt(worst) +
             " for |z| <= 0.7 (K_max = 241)");
}

void criterion6() {
  bool pass = true;
  std::ostringstream d;
  for (int n : {2, 3}) {
    double worst = 0.0;
    for (const auto& [q, p] : points_with_z({0.02, 0.05, 0.1, 0.15, 0.2})) {
      const double engine = grade_eval(quartic_engine(), n, q, p);
      const CorrectionBreakdown b = quartic_correction_breakdown(n, quartic_params(), q, p);
      const double dev = rel(engine, b.total);
      if (!(dev < 1e-6)) {
        for (const auto& t : b.terms) finding("T_" + std::to_string(n) + " term " + t.label + " = " + fmt(t.value));
      }
      worst = std::max(worst, dev);
    }
    const auto ec = engine_z_coefficients(quartic_engine(), n, kQMu, kQLambda);
    const auto pc = pfq_series_coefficients(n == 2 ? correction_2_terms() : correction_3_terms(),
                                            static_cast<int>(ec.size()) - 1);
    std::size_t first_bad = ec.size();
    for (std::size_t k = 0; k < ec.size(); ++k) {
      if (ec[k] != pc[k]) {
        first_bad = k;
        break;
      }
    }
    if (first_bad < ec.size()) {
      finding("T_" + std::to_string(n) + " published list departs from the engine at z^" + std::to_string(first_bad));
    }
    pass = pass && worst < 1e-6;
    d << "T_" << n << " max rel " << fmt(worst) << ", z-coefficients "
      << (first_bad == ec.size() ? "equal" : "differ") << " through z^" << ec.size() - 1 << "; ";
  }
  report(6, pass, d.str() + "|z| <= 0.2");
}

void criterion7() {
  const double hbar = 1.0;
  std::vector<double> nodes;
  for (int i = 0; i < 5; ++i) nodes.push_back(-0.8 + 0.4 * i);
  bool exact = true;
  double worst = 0.0;
  std::vector<Case> cases = conjugacy_family();
  for (const auto& c : cases) {
    const PolynomialPotential& v = c.v;
    const KernelSeries k = weyl_map_series(build_moyal_toa(v, kMu, 2, 13));
    exact = exact && check_kernel_boundaries(k).ok() && tke_residual(k, v).interior_zero();
  }
  for (const auto& c : {cases[1], cases[2]}) {
    const KernelSeries k = weyl_map_series(build_moyal_toa(c.v, kMu, 2, 25));
    const double mu = to_double(kMu);
    for (int n = 0; n <= 2; ++n) {
      const KernelGrid s = sample_kernel_series(k, hbar, nodes, nodes, n);
      const KernelGrid q = sample_kernel_quadrature(c.v, mu, hbar, 2, nodes, nodes, n);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          const double scale = std::max(1.0, std::abs(s.values[i][j]));
          worst = std::max(worst, std::abs(s.values[i][j] - q.values[i][j]) / scale);
          if (n == 0) {
            const double t0 = kernel_T0_quadrature(c.v, mu, hbar, nodes[i], nodes[j]);
            worst = std::max(worst, std::abs(s.values[i][j] - t0) / scale);
          }
        }
      }
    }
  }
  report(7, exact && worst < 1e-8,
         std::string("T(q,q)=q/2, T(q,-q)=0, symmetry and grade-wise TKE through N_max=2 ") +
             (exact ? "exact" : "BROKEN") + " for q^3, q^4, q^3+q^4, q^6; 0F1/nested quadrature vs series max dev " +
             fmt(worst) + " on 5x5, n <= 2");
}

void criterion8() {
  bool pass = true;
  int count = 0;
  std::vector<Case> all = conjugacy_family();
  for (const auto& c : linear_family()) all.push_back(c);
  for (const auto& c : all) {
    for (int n_max : {0, 1, 2, 3}) {
      const PhaseSeries t = build_moyal_toa(c.v, kMu, n_max, 13);
      pass = pass && inverse_weyl_roundtrip(weyl_map_series(t)) == t;
      ++count;
    }
  }
  report(8, pass, "exact entry equality for " + std::to_string(count) + " generated kernels");
}

void criterion9() {
  bool odd = true;
  bool scaling = true;
  bool general_bound = true;
  bool law_low_degree = true;
  std::vector<std::string> violations;
  std::vector<Case> all = conjugacy_family();
  for (const auto& c : linear_family()) all.push_back(c);
  all.push_back({"q^5", mono(Rational(1, 2), 5)});
  for (const auto& c : all) {
    const PhaseSeries t = build_moyal_toa(c.v, kMu, 3, 21);
    odd = odd && check_time_reversal(t);
    for (const auto& [key, poly] : t.terms().terms()) odd = odd && key.second < 0;
    for (int n = 1; n <= 3; ++n) {
      const auto entries = t.grade(n);
      if (entries.empty()) continue;
      const int min_abs = -entries.front().first;
      general_bound = general_bound && min_abs >= c.v.min_abs_p_exponent(n);
      if (min_abs < 4 * n + 1) {
        violations.push_back(c.name + " grade " + std::to_string(n) + " has p^" + std::to_string(-min_abs));
        if (c.v.degree() <= 4) law_low_degree = false;
      }
    }
    for (int n = 0; n <= 3; ++n) {
      GradedSeries g;
      for (const auto& [m, poly] : t.grade(n)) g.add(n, m, poly);
      if (g.empty()) continue;
      const double base = g.eval(0.3, 2.0, 1.0);
      const double fitted = std::log(g.eval(0.3, 2.0, 0.5) / base) / std::log(0.5);
      scaling = scaling && std::abs(fitted - 2.0 * n) < 1e-12;
    }
  }
  for (const auto& v : violations) finding("minimum-exponent law 4n+1 violated: " + v);
  if (!violations.empty()) {
    finding("the fifth-derivative bracket term feeds grade 2 from grade 0 with two extra p-powers, so "
            "4n+1 holds only when V^(5) = 0; the engine meets the generalized bound for every potential");
  }
  report(9, odd && scaling && violations.empty(),
         std::string("odd negative exponents ") + (odd ? "yes" : "NO") + ", hbar^(2n) scaling " +
             (scaling ? "exact" : "BROKEN") + ", |m| >= 4n+1 " +
             (violations.empty() ? "everywhere" : law_low_degree ? "only for degree <= 4" : "BROKEN") +
             ", generalized bound " + (general_bound ? "met" : "BROKEN"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria pass\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
