#pragma once

#include <array>
#include <map>

#include "gispec/types.hpp"

namespace gispec::poly {

/// Trivariate polynomial with real coefficients, sparse over monomials
/// x^a y^b z^c. Arithmetic and differentiation are exact on coefficients.
class Polynomial {
 public:
  using Exponents = std::array<int, 3>;

  Polynomial() = default;

  static Polynomial constant(double c);
  static Polynomial variable(int axis);  // 0 -> x, 1 -> y, 2 -> z
  static Polynomial monomial(int a, int b, int c, double coeff);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(double s) const;

  Polynomial derivative(int axis) const;

  double eval(const Vec3& x) const;
  int degree() const;
  double coeff_norm() const;  // l2 norm of coefficients
  bool empty() const { return terms_.empty(); }
  const std::map<Exponents, double>& terms() const { return terms_; }

  void add_term(const Exponents& e, double c);

 private:
  std::map<Exponents, double> terms_;
};

/// Gradient of phi evaluated at x.
Vec3 gradient(const Polynomial& phi, const Vec3& x);

/// Component polynomials of grad(phi) x [x, y, z]^T (a polynomial field).
std::array<Polynomial, 3> grad_cross_position(const Polynomial& phi);

/// Exact divergence of a polynomial vector field.
Polynomial divergence(const std::array<Polynomial, 3>& field);

}  // namespace gispec::poly
