#include "toa/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace toa {

void BiPoly::add(int px, int py, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({px, py}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int px, int py) const {
  auto it = terms_.find({px, py});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_column(const QPoly& poly_in_x, int py, const Rational& c) {
  if (c == 0) return;
  const auto& cs = poly_in_x.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] != 0) add(static_cast<int>(i), py, cs[i] * c);
  }
}

BiPoly BiPoly::diff_x(unsigned order) const {
  BiPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.first < static_cast<int>(order)) continue;
    Integer f = 1;
    for (unsigned j = 0; j < order; ++j) f *= key.first - static_cast<int>(j);
    out.add(key.first - static_cast<int>(order), key.second, c * f);
  }
  return out;
}

BiPoly BiPoly::diff_y(unsigned order) const {
  BiPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.second < static_cast<int>(order)) continue;
    Integer f = 1;
    for (unsigned j = 0; j < order; ++j) f *= key.second - static_cast<int>(j);
    out.add(key.first, key.second - static_cast<int>(order), c * f);
  }
  return out;
}

QPoly BiPoly::column(int py) const {
  std::vector<Rational> cs;
  for (const auto& [key, c] : terms_) {
    if (key.second != py) continue;
    if (static_cast<std::size_t>(key.first) >= cs.size()) cs.resize(static_cast<std::size_t>(key.first) + 1);
    cs[static_cast<std::size_t>(key.first)] = c;
  }
  return QPoly(std::move(cs));
}

int BiPoly::max_y_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

bool BiPoly::is_even_in_y() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.second % 2 == 0; });
}

QPoly BiPoly::at_x_zero() const {
  std::vector<Rational> cs;
  for (const auto& [key, c] : terms_) {
    if (key.first != 0) continue;
    if (static_cast<std::size_t>(key.second) >= cs.size()) cs.resize(static_cast<std::size_t>(key.second) + 1);
    cs[static_cast<std::size_t>(key.second)] = c;
  }
  return QPoly(std::move(cs));
}

double BiPoly::eval(double x, double y) const {
  double total = 0.0;
  for (const auto& [key, c] : terms_) {
    total += c.get_d() * std::pow(x, key.first) * std::pow(y, key.second);
  }
  return total;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

}  // namespace toa
