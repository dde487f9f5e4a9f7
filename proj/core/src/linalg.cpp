#include "gispec/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gispec::linalg {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.rows() > kMaxDim) {
    throw std::invalid_argument(std::string(who) + ": dimension " + std::to_string(a.rows()) +
                                " exceeds limit " + std::to_string(kMaxDim));
  }
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
  }
}

double measured_residual(const Matrix& a, const Vector& vals, const Matrix& vecs) {
  const double na = a.norm();  // Frobenius
  if (na == 0.0) return 0.0;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vals.size(); ++j) {
    const double nv = vecs.col(j).norm();
    if (nv == 0.0) continue;
    const double r = (a * vecs.col(j) - vals(j) * vecs.col(j)).norm() / (na * nv);
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

EigenResult eig_complex(const Matrix& a) {
  require_square(a, "eig_complex");
  Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_complex: QR iteration did not converge");
  }
  EigenResult result;
  result.eigenvalues = solver.eigenvalues();
  result.eigenvectors = solver.eigenvectors();
  result.residual_bound = measured_residual(a, result.eigenvalues, *result.eigenvectors);
  return result;
}

Matrix nullspace(const Matrix& a, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("nullspace: tol must be positive");
  if (a.size() == 0) return Matrix(a.cols(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index keep = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) ++keep;
  }
  // Columns of V beyond the numerical rank, plus any dimensions with no
  // singular value at all (cols > rows).
  const Eigen::Index rank = sv.size() - keep;
  const Eigen::Index dim = a.cols() - rank;
  return svd.matrixV().rightCols(dim);
}

Eigen::MatrixXd nullspace_real(const Eigen::MatrixXd& a, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("nullspace: tol must be positive");
  if (a.size() == 0) return Eigen::MatrixXd(a.cols(), 0);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index keep = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) ++keep;
  }
  const Eigen::Index rank = sv.size() - keep;
  const Eigen::Index dim = a.cols() - rank;
  return svd.matrixV().rightCols(dim);
}

EigenResult eig_sym_generalized(const Matrix& a, const Matrix& b) {
  require_square(a, "eig_sym_generalized");
  require_square(b, "eig_sym_generalized");
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("eig_sym_generalized: A and B must have equal dimension");
  }
  Eigen::LLT<Matrix> llt(b);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("eig_sym_generalized: B is not positive definite (Cholesky failed)");
  }
  // Reduce to the standard Hermitian problem L^-1 A L^-* y = mu y.
  const Matrix l = llt.matrixL();
  Matrix t = l.triangularView<Eigen::Lower>().solve(a);
  t = l.triangularView<Eigen::Lower>().solve(t.adjoint().eval()).adjoint();
  t = 0.5 * (t + t.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(t);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_sym_generalized: eigensolver did not converge");
  }
  EigenResult result;
  result.eigenvalues = solver.eigenvalues().cast<Complex>();
  Matrix vecs = l.adjoint().triangularView<Eigen::Upper>().solve(solver.eigenvectors());
  result.eigenvectors = vecs;
  // Residual against the pencil A v = mu B v.
  const double scale = a.norm() + b.norm();
  double worst = 0.0;
  if (scale > 0.0) {
    for (Eigen::Index j = 0; j < vecs.cols(); ++j) {
      const double nv = vecs.col(j).norm();
      if (nv == 0.0) continue;
      worst = std::max(worst, (a * vecs.col(j) - result.eigenvalues(j) * (b * vecs.col(j))).norm() /
                                  (scale * nv));
    }
  }
  result.residual_bound = worst;
  return result;
}

EigenResult solve_quadratic_pencil(const Matrix& m, const Matrix& c, const Matrix& k) {
  require_square(m, "solve_quadratic_pencil");
  require_square(c, "solve_quadratic_pencil");
  require_square(k, "solve_quadratic_pencil");
  const Eigen::Index n = m.rows();
  if (c.rows() != n || k.rows() != n) {
    throw std::invalid_argument("solve_quadratic_pencil: M, C, K must share one dimension");
  }
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("solve_quadratic_pencil: M is not positive definite");
  }
  const Matrix l = llt.matrixL();
  // Symmetrized companion: with y = L* v the pencil becomes
  // l^2 I + 2 l L^-1 C L^-* + L^-1 K L^-*.
  auto whiten = [&](const Matrix& x) {
    Matrix t = l.triangularView<Eigen::Lower>().solve(x);
    return Matrix(l.triangularView<Eigen::Lower>().solve(t.adjoint().eval()).adjoint());
  };
  const Matrix kw = whiten(k);
  const Matrix cw = whiten(c);

  Matrix companion = Matrix::Zero(2 * n, 2 * n);
  companion.topRightCorner(n, n) = Matrix::Identity(n, n);
  companion.bottomLeftCorner(n, n) = -kw;
  companion.bottomRightCorner(n, n) = -2.0 * cw;

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("solve_quadratic_pencil: companion eigensolve did not converge");
  }

  EigenResult result;
  result.eigenvalues = solver.eigenvalues();
  Matrix vecs(n, 2 * n);
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    // First block row of the companion forces y2 = l y1, so y1 never vanishes.
    Vector y1 = solver.eigenvectors().col(j).head(n);
    Vector v = l.adjoint().triangularView<Eigen::Upper>().solve(y1);
    const double nv = v.norm();
    if (nv > 0.0) v /= nv;
    vecs.col(j) = v;
  }
  result.eigenvectors = vecs;

  const double nm = m.norm(), nc = c.norm(), nk = k.norm();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    const Complex lam = result.eigenvalues(j);
    const Vector v = vecs.col(j);
    const double denom = nm * std::norm(lam) + 2.0 * nc * std::abs(lam) + nk;
    if (denom == 0.0) continue;
    const double r = ((lam * lam) * (m * v) + (2.0 * lam) * (c * v) + k * v).norm() / denom;
    worst = std::max(worst, r);
  }
  result.residual_bound = worst;
  return result;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

int numeric_rank(const Matrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++r;
  }
  return r;
}

}  // namespace gispec::linalg
