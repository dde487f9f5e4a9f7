#pragma once

#include <optional>
#include <stdexcept>

#include "gispec/types.hpp"

namespace gispec::linalg {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxDim = 2048;
/// Default relative singular-value threshold for rank decisions.
inline constexpr double kRankTol = 1e-10;

struct EigenResult {
  Vector eigenvalues;
  std::optional<Matrix> eigenvectors;  // columns, aligned with eigenvalues
  /// Max measured ||A v - mu v|| / (||A|| ||v||) over returned pairs; for the
  /// quadratic pencil the denominator is (||M|| |l|^2 + 2 ||C|| |l| + ||K||) ||v||.
  double residual_bound = 0.0;
};

/// All eigenvalues (with algebraic multiplicity) and eigenvectors of a square
/// complex matrix. Throws std::invalid_argument on shape/size violations and
/// std::runtime_error if the QR iteration fails to converge.
EigenResult eig_complex(const Matrix& a);

/// Orthonormal basis of {v : ||A v|| <= tol ||A|| ||v||} from the SVD.
/// Returns an n x 0 matrix when the nullspace is trivial.
Matrix nullspace(const Matrix& a, double tol);
Eigen::MatrixXd nullspace_real(const Eigen::MatrixXd& a, double tol);

/// A Hermitian, B Hermitian positive definite: real eigenvalues ascending,
/// B-orthonormal eigenvectors. Throws if B fails its Cholesky factorization.
EigenResult eig_sym_generalized(const Matrix& a, const Matrix& b);

/// The 2n eigenvalues of the quadratic pencil l^2 M + 2 l C + K via the
/// companion linearization [[0, I], [-M^-1 K, -2 M^-1 C]], applied after a
/// Cholesky-based symmetrization of M. Throws if M is not positive definite.
EigenResult solve_quadratic_pencil(const Matrix& m, const Matrix& c, const Matrix& k);

double spectral_norm(const Matrix& a);
int numeric_rank(const Matrix& a, double tol = kRankTol);

}  // namespace gispec::linalg
