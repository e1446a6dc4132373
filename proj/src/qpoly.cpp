#include "toa/qpoly.hpp"

#include <utility>

namespace toa {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPoly::QPoly(std::initializer_list<Rational> coeffs) : QPoly(std::vector<Rational>(coeffs)) {}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<Rational> v(power + 1);
  v[power] = c;
  QPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

Rational QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::derivative(unsigned order) const {
  if (static_cast<int>(order) > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Integer falling = 1;
    for (unsigned j = 0; j < order; ++j) falling *= static_cast<unsigned long>(i - j);
    out[i - order] = coeffs_[i] * falling;
  }
  QPoly p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

QPoly QPoly::scale_argument(const Rational& a) const {
  QPoly p = *this;
  Rational power = 1;
  for (auto& c : p.coeffs_) {
    c *= power;
    power *= a;
  }
  p.trim();
  return p;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result = QPoly::constant(1);
  QPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

double QPoly::eval(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

Rational QPoly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  // Skip zero coefficients: potentials are typically sparse (lambda q^4).
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (b.coeffs_[j] != 0) nz.push_back(j);
  }
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j : nz) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  QPoly p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

QPoly poly_integrate_zero_to_q(const QPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    out[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i + 1));
  }
  return QPoly(std::move(out));
}

}  // namespace toa
