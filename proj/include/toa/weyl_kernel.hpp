#pragma once

#include <functional>
#include <string>
#include <vector>

#include "toa/bipoly.hpp"
#include "toa/phase_series.hpp"
#include "toa/potential.hpp"

namespace toa {

/// Kernel factor of the Weyl-ordered arrival-time operator,
///   T(q, q') = sum_n hbar^(2n) B_n(u, nu),  u = q + q',  nu = (q - q') / hbar.
///
/// Only the real symmetric factor is stored; the (mu / i hbar) sgn(q - q')
/// prefactor of the full kernel is implicit. Scaling the difference
/// coordinate by hbar makes every grade a pure polynomial. Grade n is exact
/// for nu-degrees up to k_max - 1.
class KernelSeries {
 public:
  KernelSeries(std::vector<BiPoly> grades, Rational mu, int n_max, int k_max);

  const std::vector<BiPoly>& grades() const { return grades_; }
  const BiPoly& grade(int n) const { return grades_.at(static_cast<std::size_t>(n)); }
  BiPoly& mutable_grade(int n) { return grades_.at(static_cast<std::size_t>(n)); }
  const Rational& mu() const { return mu_; }
  int max_grade() const { return n_max_; }
  int max_p_exponent() const { return k_max_; }

  /// hbar^(2n) B_n(q + q', (q - q') / hbar).
  double grade_value(int n, double q, double qprime, double hbar) const;
  /// Sum of grade_value over all grades.
  double value(double q, double qprime, double hbar) const;

 private:
  std::vector<BiPoly> grades_;
  Rational mu_;
  int n_max_;
  int k_max_;
};

/// Weyl map of the phase-space series term by term:
///   hbar^(2n) c(q) p^(-M)  ->  hbar^(2n) (-1)^((M+1)/2) c(u/2) nu^(M-1) / (2 mu (M-1)!).
/// Throws StructuralError on even exponents.
KernelSeries weyl_map_series(const PhaseSeries& t);

/// Inverse of weyl_map_series. Throws StructuralError on odd nu powers.
PhaseSeries inverse_weyl_roundtrip(const KernelSeries& k);

/// Exact grade-wise time kernel equation residual. In the scaled variables
/// the equation reads, at grade n,
///   (2/mu) d^2 B_n / du dnu
///     = sum_{r=0}^{n} nu^(2r+1) / (2^(2r) (2r+1)!) V^(2r+1)(u/2) B_{n-r}.
/// interior[n] holds the residual at nu-degrees <= k_max - 2, where every
/// contributing coefficient is exact; frontier[n] holds the rest.
struct TkeSeriesReport {
  std::vector<BiPoly> interior;
  std::vector<BiPoly> frontier;
  bool interior_zero() const;
  /// Largest |coefficient| among interior residuals.
  double max_abs_interior() const;
};

TkeSeriesReport tke_residual(const KernelSeries& k, const PolynomialPotential& v);

struct KernelBoundaryReport {
  bool diagonal_ok = false;       // T(q, q) = q/2
  bool antidiagonal_ok = false;   // T(q, -q) = 0
  bool symmetric_ok = false;      // T(q, q') = T(q', q)
  bool ok() const { return diagonal_ok && antidiagonal_ok && symmetric_ok; }
};

/// Exact boundary and symmetry conditions of the kernel factor.
KernelBoundaryReport check_kernel_boundaries(const KernelSeries& k);

enum class KernelRoute { series, quadrature };
std::string to_string(KernelRoute r);

inline constexpr int kAllGrades = -1;

/// Sampled kernel factor; values[i][j] belongs to (q_nodes[i], qp_nodes[j]).
struct KernelGrid {
  std::vector<double> q_nodes;
  std::vector<double> qp_nodes;
  std::vector<std::vector<double>> values;
  int grade = kAllGrades;
  KernelRoute route = KernelRoute::series;
};

/// Samples one grade (or all grades) of a kernel series.
KernelGrid sample_kernel_series(const KernelSeries& k, double hbar, const std::vector<double>& q_nodes,
                                const std::vector<double>& qp_nodes, int grade = kAllGrades);

/// Central-difference residual of
///   -(hbar^2/2mu) T_qq + (hbar^2/2mu) T_q'q' + [V(q) - V(q')] T
/// at interior nodes; the grid must be uniform with equal steps and at least
/// three interior nodes per axis. Returns the largest absolute residual.
double tke_residual(const KernelGrid& grid, const PolynomialPotential& v, double mu, double hbar);

/// Kernel factor contribution as a function of (u, v) = (q + q', q - q').
using KernelFunction = std::function<double(double u, double v)>;

inline constexpr int kDefaultKernelNodes = 64;
inline constexpr int kDefaultChebyshevDegree = 24;

/// (1/4) int_0^(q+q') ds 0F1(; 1; (mu/2hbar^2) (q-q')^2 [V((q+q')/2) - V(s/2)]).
double kernel_T0_quadrature(const PolynomialPotential& v, double mu, double hbar, double q, double qprime,
                            int nodes = kDefaultKernelNodes);

/// Grade-n contribution hbar^(2n) T_n(q, q') from the nested recursion
///   (mu/2hbar^2) sum_{r=1}^{n} 1/((2r+1)! 2^(2r)) int_0^u ds V^(2r+1)(s/2)
///     int_0^v dw w^(2r+1) T_{n-r}(s, w) G(s, w),
///   G(s, w) = 0F1(; 1; (mu/2hbar^2)(v^2 - w^2)[V(u/2) - V(s/2)]),
/// where prior[k] evaluates the grade-k contribution in (u, v) for k < n.
double kernel_Tn_quadrature(const PolynomialPotential& v, double mu, double hbar, int n, double q,
                            double qprime, const std::vector<KernelFunction>& prior,
                            int nodes = kDefaultKernelNodes);

/// Tensor-product Chebyshev interpolant of f on [u_lo, u_hi] x [0, w_hi],
/// extended to negative w by f(u, -w) = f(u, w).
class ChebyshevKernel {
 public:
  ChebyshevKernel(const KernelFunction& f, double u_lo, double u_hi, double w_hi,
                  int degree = kDefaultChebyshevDegree);
  double operator()(double u, double w) const;

 private:
  std::vector<double> u_nodes_;
  std::vector<double> w_nodes_;
  std::vector<double> bary_;
  std::vector<std::vector<double>> samples_;  // [u index][w index]
};

/// Grade evaluators 0..n_max built by the quadrature recursion, each lower
/// grade memoized on a Chebyshev grid covering u in [u_lo, u_hi] (0
/// included) and |v| <= v_max.
std::vector<KernelFunction> quadrature_kernel_grades(const PolynomialPotential& v, double mu, double hbar,
                                                     int n_max, double u_lo, double u_hi, double v_max,
                                                     int nodes = kDefaultKernelNodes,
                                                     int degree = kDefaultChebyshevDegree);

/// Samples quadrature-route grades on a grid (grade = kAllGrades sums them).
KernelGrid sample_kernel_quadrature(const PolynomialPotential& v, double mu, double hbar, int n_max,
                                    const std::vector<double>& q_nodes, const std::vector<double>& qp_nodes,
                                    int grade = kAllGrades);

}  // namespace toa
