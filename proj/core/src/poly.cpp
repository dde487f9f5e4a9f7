#include "gispec/poly.hpp"

#include <cmath>

namespace gispec::poly {

void Polynomial::add_term(const Exponents& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(double c) {
  Polynomial p;
  p.add_term({0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::variable(int axis) {
  Polynomial p;
  Exponents e{0, 0, 0};
  e[axis] = 1;
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::monomial(int a, int b, int c, double coeff) {
  Polynomial p;
  p.add_term({a, b, c}, coeff);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      p.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    }
  }
  return p;
}

Polynomial Polynomial::scaled(double s) const {
  Polynomial p;
  for (const auto& [e, c] : terms_) p.add_term(e, s * c);
  return p;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial p;
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    d[axis] -= 1;
    p.add_term(d, c * e[axis]);
  }
  return p;
}

double Polynomial::eval(const Vec3& x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    acc += c * std::pow(x.x(), e[0]) * std::pow(x.y(), e[1]) * std::pow(x.z(), e[2]);
  }
  return acc;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

double Polynomial::coeff_norm() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c * c;
  return std::sqrt(s);
}

Vec3 gradient(const Polynomial& phi, const Vec3& x) {
  return {phi.derivative(0).eval(x), phi.derivative(1).eval(x), phi.derivative(2).eval(x)};
}

std::array<Polynomial, 3> grad_cross_position(const Polynomial& phi) {
  const Polynomial gx = phi.derivative(0);
  const Polynomial gy = phi.derivative(1);
  const Polynomial gz = phi.derivative(2);
  const Polynomial px = Polynomial::variable(0);
  const Polynomial py = Polynomial::variable(1);
  const Polynomial pz = Polynomial::variable(2);
  return {gy * pz - gz * py, gz * px - gx * pz, gx * py - gy * px};
}

Polynomial divergence(const std::array<Polynomial, 3>& field) {
  return field[0].derivative(0) + field[1].derivative(1) + field[2].derivative(2);
}

}  // namespace gispec::poly
