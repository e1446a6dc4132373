#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "toa/errors.hpp"
#include "toa/parallel.hpp"
#include "toa/quadrature.hpp"
#include "toa/specfun.hpp"
#include "toa/weyl_kernel.hpp"

namespace toa {

namespace {

constexpr double kPi = 3.14159265358979323846;

double hyp0f1_unit(double z) {
  static thread_local HypergeomSpec spec{{}, {1.0}, 0.0};
  spec.z = z;
  return hyp_pfq(spec);
}

QuadratureSpec legendre(double lo, double hi, int nodes) {
  QuadratureSpec s;
  s.rule = QuadratureRule::gauss_legendre;
  s.node_count = nodes;
  s.lower = lo;
  s.upper = hi;
  return s;
}

double t0_uv(const PolynomialPotential& v, double mu, double hbar, double u, double w, int nodes) {
  const double scale = mu / (2.0 * hbar * hbar) * w * w;
  const double vu = v(u / 2.0);
  return 0.25 * integrate([&](double s) { return hyp0f1_unit(scale * (vu - v(s / 2.0))); },
                          legendre(0.0, u, nodes));
}

double tn_uv(const PolynomialPotential& v, double mu, double hbar, int n, double u, double w,
             const std::vector<KernelFunction>& prior, int nodes) {
  if (static_cast<int>(prior.size()) < n) {
    throw PreconditionError("kernel recursion at grade " + std::to_string(n) + " needs all lower grades");
  }
  const double coupling = mu / (2.0 * hbar * hbar);
  const double vu = v(u / 2.0);
  double total = 0.0;
  for (int r = 1; r <= n; ++r) {
    const QPoly dv = v.derivative(static_cast<unsigned>(2 * r + 1));
    if (dv.is_zero()) continue;
    double c = 1.0 / std::pow(4.0, r);
    for (int i = 2; i <= 2 * r + 1; ++i) c /= i;
    const KernelFunction& lower = prior[static_cast<std::size_t>(n - r)];
    const auto outer = [&](double s) {
      const double weight = dv.eval(s / 2.0);
      if (weight == 0.0) return 0.0;
      const double dvs = vu - v(s / 2.0);
      const auto inner = [&](double x) {
        return std::pow(x, 2 * r + 1) * lower(s, x) * hyp0f1_unit(coupling * (w * w - x * x) * dvs);
      };
      return weight * integrate(inner, legendre(0.0, w, nodes));
    };
    total += c * integrate(outer, legendre(0.0, u, nodes));
  }
  return coupling * total;
}

std::vector<double> chebyshev_nodes(double lo, double hi, int degree) {
  if (!(hi - lo > 0)) hi = lo + 1.0;
  std::vector<double> x(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) x[static_cast<std::size_t>(j)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(kPi * j / degree);
  return x;
}

// Barycentric weights lambda_j(x) for Chebyshev points of the second kind.
std::vector<double> bary_coeffs(const std::vector<double>& nodes, const std::vector<double>& b, double x) {
  std::vector<double> l(nodes.size(), 0.0);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (x == nodes[j]) {
      l[j] = 1.0;
      return l;
    }
  }
  double denom = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    l[j] = b[j] / (x - nodes[j]);
    denom += l[j];
  }
  for (double& lj : l) lj /= denom;
  return l;
}

}  // namespace

double kernel_T0_quadrature(const PolynomialPotential& v, double mu, double hbar, double q, double qprime,
                            int nodes) {
  return t0_uv(v, mu, hbar, q + qprime, q - qprime, nodes);
}

double kernel_Tn_quadrature(const PolynomialPotential& v, double mu, double hbar, int n, double q,
                            double qprime, const std::vector<KernelFunction>& prior, int nodes) {
  if (n < 1) throw PreconditionError("kernel recursion grade must be >= 1");
  return tn_uv(v, mu, hbar, n, q + qprime, q - qprime, prior, nodes);
}

ChebyshevKernel::ChebyshevKernel(const KernelFunction& f, double u_lo, double u_hi, double w_hi, int degree)
    : u_nodes_(chebyshev_nodes(u_lo, u_hi, degree)), w_nodes_(chebyshev_nodes(0.0, w_hi, degree)) {
  if (degree < 1) throw PreconditionError("Chebyshev degree must be >= 1");
  bary_.resize(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) {
    bary_[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1.0 : -1.0) * (j == 0 || j == degree ? 0.5 : 1.0);
  }
  samples_.assign(u_nodes_.size(), std::vector<double>(w_nodes_.size()));
  parallel_for(u_nodes_.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < w_nodes_.size(); ++j) samples_[i][j] = f(u_nodes_[i], w_nodes_[j]);
  });
}

double ChebyshevKernel::operator()(double u, double w) const {
  const auto lu = bary_coeffs(u_nodes_, bary_, u);
  const auto lw = bary_coeffs(w_nodes_, bary_, std::abs(w));
  double total = 0.0;
  for (std::size_t i = 0; i < lu.size(); ++i) {
    if (lu[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < lw.size(); ++j) row += lw[j] * samples_[i][j];
    total += lu[i] * row;
  }
  return total;
}

std::vector<KernelFunction> quadrature_kernel_grades(const PolynomialPotential& v, double mu, double hbar,
                                                     int n_max, double u_lo, double u_hi, double v_max,
                                                     int nodes, int degree) {
  if (n_max < 0) throw PreconditionError("N_max must be >= 0");
  const double box_lo = std::min(0.0, u_lo);
  const double box_hi = std::max(0.0, u_hi);
  const double w_hi = std::abs(v_max);
  std::vector<KernelFunction> direct;
  std::vector<KernelFunction> memo;
  direct.push_back([=](double u, double w) { return t0_uv(v, mu, hbar, u, w, nodes); });
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      direct.push_back([=](double u, double w) { return tn_uv(v, mu, hbar, n, u, w, memo, nodes); });
    }
    if (n < n_max) {
      auto table = std::make_shared<ChebyshevKernel>(direct.back(), box_lo, box_hi, w_hi, degree);
      memo.push_back([table](double u, double w) { return (*table)(u, w); });
    }
  }
  return direct;
}

KernelGrid sample_kernel_quadrature(const PolynomialPotential& v, double mu, double hbar, int n_max,
                                    const std::vector<double>& q_nodes, const std::vector<double>& qp_nodes,
                                    int grade) {
  KernelGrid grid{q_nodes, qp_nodes, {}, grade, KernelRoute::quadrature};
  grid.values.assign(q_nodes.size(), std::vector<double>(qp_nodes.size()));
  if (q_nodes.empty() || qp_nodes.empty()) return grid;
  const auto [q_lo, q_hi] = std::minmax_element(q_nodes.begin(), q_nodes.end());
  const auto [p_lo, p_hi] = std::minmax_element(qp_nodes.begin(), qp_nodes.end());
  const double v_max = std::max(std::abs(*q_hi - *p_lo), std::abs(*q_lo - *p_hi));
  const int top = grade == kAllGrades ? n_max : grade;
  const auto grades = quadrature_kernel_grades(v, mu, hbar, top, *q_lo + *p_lo, *q_hi + *p_hi, v_max);
  parallel_for(q_nodes.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < qp_nodes.size(); ++j) {
      const double u = q_nodes[i] + qp_nodes[j];
      const double w = q_nodes[i] - qp_nodes[j];
      double value = 0.0;
      for (int n = grade == kAllGrades ? 0 : grade; n <= top; ++n) value += grades[static_cast<std::size_t>(n)](u, w);
      grid.values[i][j] = value;
    }
  });
  return grid;
}

}  // namespace toa
