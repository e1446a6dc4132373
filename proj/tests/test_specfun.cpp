#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "toa/errors.hpp"
#include "toa/quadrature.hpp"
#include "toa/specfun.hpp"

using namespace toa;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double erfi_by_quadrature(double x) {
  const double scale = std::exp(x * x) / std::max(x, 1.0);
  return 2.0 / std::sqrt(kPi) *
         oracle::adaptive_simpson([](double t) { return std::exp(t * t); }, 0.0, x, 1e-15 * scale, 30);
}
}  // namespace

TEST_CASE("hyp_pfq trivial arguments") {
  CHECK(hyp_pfq({{0.5, 1.0}, {1.25}, 0.0}) == 1.0);
  CHECK(hyp_pfq({{}, {1.0}, 0.0}) == 1.0);
}

TEST_CASE("hyp_pfq against fixed-length summation") {
  const double expected = oracle::pfq_fixed_terms({0.5, 1.0}, {1.25}, -0.5, 200);
  CHECK(rel(hyp_pfq({{0.5, 1.0}, {1.25}, -0.5}), expected) < 1e-12);
  const double e2 = oracle::pfq_fixed_terms({2, 113.0 / 27, 4.5}, {2.25, 86.0 / 27}, -0.2, 400);
  CHECK(rel(hyp_pfq({{2, 113.0 / 27, 4.5}, {2.25, 86.0 / 27}, -0.2}), e2) < 1e-12);
  const double e3 = oracle::pfq_fixed_terms({}, {1.0}, 7.5, 200);
  CHECK(rel(hyp_pfq({{}, {1.0}, 7.5}), e3) < 1e-12);
  // 2F1(1, 1; 2; z) = -log(1 - z) / z.
  CHECK(rel(hyp_pfq({{1, 1}, {2}, 0.9}), -std::log(0.1) / 0.9) < 1e-11);
  // A terminating series: 2F1(-2, 1; 1; z) = (1 - z)^2.
  CHECK(hyp_pfq({{-2, 1}, {1}, 3.0}) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("hyp_pfq errors") {
  CHECK_THROWS_AS(hyp_pfq({{0.5, 1.0}, {1.25}, 1.0}), DomainError);
  CHECK_THROWS_AS(hyp_pfq({{0.5, 1.0}, {1.25}, -1.5}), DomainError);
  CHECK_THROWS_AS(hyp_pfq({{1, 1, 1}, {1}, 0.1}), DomainError);
  CHECK_THROWS_AS(hyp_pfq({{1.0}, {0.0}, 0.1}), PreconditionError);
  CHECK_THROWS_AS(hyp_pfq({{1.0}, {-3.0}, 0.1}), PreconditionError);
  CHECK_THROWS_AS(hyp_pfq({{0.5, 1.0}, {1.25}, 0.999}, 1e-12, 50), ConvergenceError);
}

TEST_CASE("erfi") {
  CHECK(erfi(0.0) == 0.0);
  CHECK(rel(erfi(1.0), erfi_by_quadrature(1.0)) < 1e-12);
  CHECK(rel(erfi(1.0), 1.6504257587975428) < 1e-14);
  for (double x : {0.5, 2.0, 5.0, 9.0}) CHECK(erfi(-x) == -erfi(x));
  for (double x : {3.0, 5.5, 6.5, 8.0}) CHECK(rel(erfi(x), erfi_by_quadrature(x)) < 1e-11);
  // Continuity across the switch from series to asymptotic expansion.
  CHECK(rel(erfi(6.0 + 1e-12), erfi(6.0)) < 1e-10);
  for (double x : {0.3, 2.0, 6.5, 30.0}) {
    const double direct = x < 26 ? std::exp(-x * x) * erfi(x) : 1.0 / (x * std::sqrt(kPi));
    CHECK(rel(erfi_scaled(x), direct) < (x < 26 ? 1e-13 : 1e-3));
  }
}

TEST_CASE("gauss-legendre rules") {
  QuadratureSpec s;
  s.node_count = 8;
  CHECK(std::abs(integrate([](double x) { return x * x; }, s) - 2.0 / 3.0) < 1e-14);
  for (int n : {2, 5, 16, 64}) {
    s.node_count = n;
    const int d = 2 * n - 2;  // even degree <= 2n - 1
    CHECK(rel(integrate([d](double x) { return std::pow(x, d); }, s), 2.0 / (d + 1)) < 1e-13);
  }
  s.node_count = 64;
  s.lower = -3.0;
  s.upper = 3.0;
  CHECK(std::abs(integrate([](double x) { return x * std::exp(-x * x) + std::sin(x); }, s)) < 1e-14);
  s.lower = 0.0;
  s.upper = kPi;
  s.panels = 4;
  CHECK(std::abs(integrate([](double x) { return std::sin(x); }, s) - 2.0) < 1e-14);
  const GaussRule& r = gauss_legendre_rule(33);
  for (std::size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
}

TEST_CASE("gauss-hermite rules") {
  QuadratureSpec s;
  s.rule = QuadratureRule::gauss_hermite;
  s.node_count = 40;
  CHECK(rel(integrate([](double x) { return std::exp(-x * x); }, s), std::sqrt(kPi)) < 1e-13);
  s.center = 1.0;
  s.scale = std::sqrt(2.0);
  CHECK(rel(integrate([](double x) { return std::exp(-(x - 1) * (x - 1) / 2) * (x - 1) * (x - 1); }, s),
            std::sqrt(2 * kPi)) < 1e-12);
  s.node_count = 150;
  s.center = 0.0;
  s.scale = 1.0;
  CHECK(rel(integrate([](double x) { return std::exp(-x * x); }, s), std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("principal value") {
  QuadratureSpec s;
  s.rule = QuadratureRule::pv_symmetric;
  s.node_count = 64;
  s.panels = 4;
  s.lower = -8.0;
  s.upper = 10.0;
  s.singularity = 0.0;
  const double pv = integrate([](double p) { return std::exp(-(p - 1) * (p - 1)) / p; }, s);
  CHECK(std::abs(pv - kPi * std::exp(-1.0) * erfi(1.0)) < 1e-8);

  s.lower = -5.0;
  s.upper = 5.0;
  CHECK(std::abs(integrate([](double p) { return std::exp(-p * p) / p; }, s)) < 1e-14);
  s.lower = -2.0;
  s.upper = 3.0;
  CHECK(std::abs(integrate([](double p) { return std::cos(p); }, s) - (std::sin(3.0) + std::sin(2.0))) < 1e-12);

  s.lower = 1.0;
  CHECK_THROWS_AS(integrate([](double p) { return 1.0 / p; }, s), PreconditionError);
  s.lower = -1.0;
  CHECK_THROWS_AS(integrate([](double p) { return 1.0 / (p * p); }, s), ConvergenceError);
}

TEST_CASE("non-finite integrand") {
  QuadratureSpec s;
  CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, s), EvaluationError);
  s.node_count = 1;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, s), PreconditionError);
}

TEST_CASE("pairwise sum is order-fixed") {
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1.0 / (1.0 + i);
  CHECK(pairwise_sum(xs) == pairwise_sum(xs));
  double naive = 0.0;
  for (double x : xs) naive += x;
  CHECK(pairwise_sum(xs) == doctest::Approx(naive).epsilon(1e-14));
}
