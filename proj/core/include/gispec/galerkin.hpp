#pragma once

#include <array>
#include <vector>

#include "gispec/linalg.hpp"
#include "gispec/types.hpp"

namespace gispec::galerkin {

enum class Weight { kOne, kInvR2 };

/// Exact integral of x^a y^b z^c over the unit ball, optionally against the
/// weight 1/|x|^2. Zero unless a, b, c are all even; otherwise
/// S / (a+b+c+3) (weight one) or S / (a+b+c+1) (weight 1/r^2) with S the
/// corresponding sphere integral from half-integer gamma factors.
double ball_monomial_integral(int a, int b, int c, Weight weight = Weight::kOne);

/// Monomial exponent enumeration for total degree <= degree, graded order.
struct MonomialTable {
  int degree = 0;
  std::vector<std::array<int, 3>> exponents;
  int index(int a, int b, int c) const;  // -1 if out of range
  int size() const { return static_cast<int>(exponents.size()); }
  static MonomialTable build(int degree);
};

/// Polynomial vector field as one coefficient vector over the basis
/// {x^a y^b z^c e_i}, component-major: coeffs[i * m + j] multiplies
/// exponents[j] in component i.
struct PolyVectorField {
  int degree = 0;
  Eigen::VectorXd coeffs;
  Vec3 eval(const Vec3& x) const;
  /// Coefficient norm of the exact divergence polynomial.
  double divergence_coeff_norm() const;
};

/// Orthonormal basis (coefficient inner product) of divergence-free,
/// boundary-tangent polynomial fields of degree <= degree on the unit ball.
struct PolyBasis {
  int degree = 0;
  Eigen::MatrixXd basis_matrix;  // (3 m) x dim, orthonormal columns
  int dim() const { return static_cast<int>(basis_matrix.cols()); }
  PolyVectorField field(int column) const;
};

/// Tangency is imposed as the polynomial identity x . u = (1 - |x|^2) q and
/// the divergence as the zero polynomial; the basis is the nullspace of the
/// stacked constraint map. Degrees 0..10 (degree 0 is empty).
PolyBasis build_basis(int degree);

enum class GhatMode { kConstant, kRadial };

/// Dense matrices of the projected pencil l^2 M + 2 l C + K on the basis.
struct GalerkinPencil {
  Eigen::MatrixXd mass;      // SPD
  Eigen::MatrixXd coriolis;  // skew
  Eigen::MatrixXd buoyancy;  // symmetric, sign matching N^2
  GhatMode ghat_mode = GhatMode::kConstant;
  Vec3 ghat{0, 0, 1};
  Vec3 omega{0, 0, 0};
  double nsq = 0.0;
  int degree = 0;
};

/// Assembles mass, Coriolis and buoyancy matrices from exact ball integrals.
/// Radial ghat uses the 1/r^2-weighted integrals and requires constant N^2.
GalerkinPencil assemble_pencil(const PolyBasis& basis, const Vec3& omega, double nsq,
                               GhatMode mode, const Vec3& ghat = Vec3(0, 0, 1));

/// All 2n pencil eigenvalues via the companion linearization.
linalg::EigenResult solve_modes(const GalerkinPencil& pencil);

/// Spectral projector 1/(2 pi i) contour integral of the linearized resolvent
/// over the circle center + radius e^{i theta}, trapezoid rule. Throws when an
/// eigenvalue is within radius * 1e-3 of the contour.
Eigen::MatrixXcd riesz_projector(const GalerkinPencil& pencil, Complex center, double radius,
                                 int quad_points);

struct PseudospectrumGrid {
  double re_min = -1.0, re_max = 1.0;
  double im_min = -1.0, im_max = 1.0;
  int n_re = 16, n_im = 16;
};

/// sigma_min(l^2 M + 2 l C + K) / (|l|^2 ||M|| + |l| ||C|| + ||K||) on the
/// grid; entry (i, j) corresponds to (im_i, re_j).
Eigen::MatrixXd pseudospectrum_scan(const GalerkinPencil& pencil, const PseudospectrumGrid& grid);

}  // namespace gispec::galerkin
