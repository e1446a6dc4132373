#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "toa/phase_series.hpp"
#include "toa/potential.hpp"
#include "toa/quadrature.hpp"

namespace toa {

/// Gaussian wave packet centred at q0 with mean momentum hbar k0.
struct GaussianState {
  double q0 = 0.0;
  double k0 = 0.0;
  double sigma = 1.0;
  double hbar = 1.0;
  double mu = 1.0;

  double p0() const { return hbar * k0; }
  /// Throws PreconditionError unless sigma, hbar and mu are positive.
  void validate() const;
};

enum class ExpectationMethod { closed_form, pv_quadrature };
std::string to_string(ExpectationMethod m);

struct ExpectationResult {
  double value = 0.0;
  ExpectationMethod method = ExpectationMethod::pv_quadrature;
  double est_error = 0.0;
  /// Wigner probability mass left out because the series diverges there.
  double excluded_mass = 0.0;
};

/// (1/(pi hbar)) exp(-(q-q0)^2/(2 sigma^2)) exp(-2 sigma^2 (p - hbar k0)^2 / hbar^2).
double wigner_gaussian(const GaussianState& s, double q, double p);

struct WignerGrid {
  std::vector<double> q_nodes;
  std::vector<double> p_nodes;
  std::vector<std::vector<double>> values;  // [q index][p index]
  /// Largest |psi| on the two edge nodes relative to max |psi|; large
  /// values mean the wavefunction was cut off and W is inaccurate.
  double est_error = 0.0;
};

/// (1/(pi hbar)) int psi*(q+y) psi(q-y) exp(2ipy/hbar) dy at every grid
/// node q = x_i, by the trapezoid rule on the uniform grid x.
WignerGrid wigner_from_wavefunction(const std::vector<double>& x, const std::vector<std::complex<double>>& psi,
                                    const std::vector<double>& p_nodes, double hbar);

using PhaseFunction = std::function<double(double q, double p)>;

/// Outer rule over q (Gauss-Legendre or Gauss-Hermite) and inner rule over p
/// (normally pv_symmetric with the pole at p = 0).
struct ExpectationQuadrature {
  QuadratureSpec q_rule;
  QuadratureSpec p_rule;
};

/// Rules covering +-12 standard deviations of the state's Wigner function
/// (and a symmetric neighbourhood of p = 0).
ExpectationQuadrature default_quadrature(const GaussianState& s);

/// int int T(q,p) W(q,p) dq dp with the p-integral as a principal value.
ExpectationResult toa_expectation(const PhaseFunction& t, const PhaseFunction& w, const ExpectationQuadrature& quad);

struct FreeToaClosedForm {
  double value = 0.0;
  /// -mu q0 / p0.
  double classical = 0.0;
  /// sqrt(2 pi) k0 sigma exp(-2 sigma^2 k0^2) erfi(sqrt(2) sigma k0).
  double quantum_factor = 0.0;
  /// False when k0 = 0, where the factorization is undefined.
  bool factor_defined = true;
};

FreeToaClosedForm free_toa_closed_form(const GaussianState& s);

/// Q(x) = sqrt(pi) x exp(-x^2) erfi(x) at x = sqrt(2) k0 sigma.
double quantum_factor(double k0_sigma);

/// <T> of a phase-space series over a Gaussian state, restricted to points
/// where the local expansion converges: |V(q) - V(q')| < p^2/(2mu) along
/// the path. The Wigner mass outside that region is reported in
/// excluded_mass. With no excluded momenta the p-integral is a principal
/// value.
ExpectationResult interacting_expectation(const PhaseSeries& t, const PolynomialPotential& v,
                                          const GaussianState& s);

}  // namespace toa
