#include "gispec/galerkin.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "gispec/parallel.hpp"

namespace gispec::galerkin {

namespace {

// Gamma(k/2) for integer k >= 1 by the half-integer recurrence.
double gamma_half(int k) {
  double acc = (k % 2 == 0) ? 1.0 : std::sqrt(M_PI);  // Gamma(1) or Gamma(1/2)
  for (int j = (k % 2 == 0) ? 2 : 1; j < k; j += 2) {
    acc *= 0.5 * j;  // Gamma(z + 1) = z Gamma(z) with z = j/2
  }
  return acc;
}

int binom3(int d) { return (d + 1) * (d + 2) * (d + 3) / 6; }  // #monomials of degree <= d

}  // namespace

double ball_monomial_integral(int a, int b, int c, Weight weight) {
  if (a < 0 || b < 0 || c < 0) {
    throw std::invalid_argument("ball_monomial_integral: exponents must be nonnegative");
  }
  if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) return 0.0;
  const double sphere = 2.0 * gamma_half(a + 1) * gamma_half(b + 1) * gamma_half(c + 1) /
                        gamma_half(a + b + c + 3);
  const int shift = weight == Weight::kOne ? 3 : 1;
  return sphere / static_cast<double>(a + b + c + shift);
}

MonomialTable MonomialTable::build(int degree) {
  MonomialTable t;
  t.degree = degree;
  for (int d = 0; d <= degree; ++d) {
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        t.exponents.push_back({a, b, d - a - b});
      }
    }
  }
  return t;
}

int MonomialTable::index(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0) return -1;
  const int d = a + b + c;
  if (d > degree) return -1;
  // Offset of degree block d, then position inside the block.
  int idx = binom3(d - 1);
  for (int aa = d; aa > a; --aa) idx += d - aa + 1;
  idx += (d - a) - b;
  return idx;
}

Vec3 PolyVectorField::eval(const Vec3& x) const {
  const MonomialTable t = MonomialTable::build(degree);
  const int m = t.size();
  // Monomial values at x, reused by all three components.
  Eigen::VectorXd mono(m);
  for (int j = 0; j < m; ++j) {
    const auto& e = t.exponents[j];
    mono(j) = std::pow(x.x(), e[0]) * std::pow(x.y(), e[1]) * std::pow(x.z(), e[2]);
  }
  Vec3 out;
  for (int i = 0; i < 3; ++i) out(i) = coeffs.segment(i * m, m).dot(mono);
  return out;
}

double PolyVectorField::divergence_coeff_norm() const {
  const MonomialTable t = MonomialTable::build(degree);
  const MonomialTable td = MonomialTable::build(degree == 0 ? 0 : degree - 1);
  const int m = t.size();
  Eigen::VectorXd div = Eigen::VectorXd::Zero(td.size());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < m; ++j) {
      auto e = t.exponents[j];
      if (e[i] == 0) continue;
      const double c = coeffs(i * m + j) * e[i];
      e[i] -= 1;
      const int k = td.index(e[0], e[1], e[2]);
      if (k >= 0) div(k) += c;
    }
  }
  return div.norm();
}

PolyVectorField PolyBasis::field(int column) const {
  return PolyVectorField{degree, basis_matrix.col(column)};
}

PolyBasis build_basis(int degree) {
  if (degree < 0 || degree > 10) {
    throw std::invalid_argument("build_basis: degree must be in 0..10");
  }
  if (degree == 0) {
    // Constant fields are never tangent to the sphere.
    return PolyBasis{0, Eigen::MatrixXd(3, 0)};
  }
  const MonomialTable t = MonomialTable::build(degree);
  const MonomialTable t_div = MonomialTable::build(degree - 1);
  const MonomialTable t_tan = MonomialTable::build(degree + 1);
  const int m = t.size();
  const int mq = t_div.size();  // q has degree <= degree - 1

  const int n_unknowns = 3 * m + mq;
  const int n_rows = t_div.size() + t_tan.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_rows, n_unknowns);

  // Divergence rows: coefficient of each monomial of d/dx u1 + d/dy u2 + d/dz u3.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < m; ++j) {
      auto e = t.exponents[j];
      if (e[i] == 0) continue;
      const double c = static_cast<double>(e[i]);
      e[i] -= 1;
      const int row = t_div.index(e[0], e[1], e[2]);
      if (row >= 0) a(row, i * m + j) += c;
    }
  }

  // Tangency rows: coefficients of x . u - (1 - |x|^2) q as a polynomial of
  // degree <= degree + 1.
  const int row0 = t_div.size();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < m; ++j) {
      auto e = t.exponents[j];
      e[i] += 1;
      a(row0 + t_tan.index(e[0], e[1], e[2]), i * m + j) += 1.0;
    }
  }
  for (int j = 0; j < mq; ++j) {
    const auto e = t_div.exponents[j];
    a(row0 + t_tan.index(e[0], e[1], e[2]), 3 * m + j) -= 1.0;
    for (int i = 0; i < 3; ++i) {
      auto e2 = e;
      e2[i] += 2;
      a(row0 + t_tan.index(e2[0], e2[1], e2[2]), 3 * m + j) += 1.0;
    }
  }

  const Eigen::MatrixXd z = linalg::nullspace_real(a, 1e-12);
  // The u-part of the nullspace has full column rank (u = 0 forces q = 0);
  // orthonormalize it in the coefficient inner product.
  const Eigen::MatrixXd u_part = z.topRows(3 * m);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(u_part, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-12 * (sv.size() ? sv(0) : 0.0)) ++rank;
  }
  PolyBasis basis;
  basis.degree = degree;
  basis.basis_matrix = svd.matrixU().leftCols(rank);
  return basis;
}

namespace {

// Gram matrix of monomials of degree <= degree under the given ball weight.
Eigen::MatrixXd monomial_gram(const MonomialTable& t, Weight weight) {
  const int m = t.size();
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto& a = t.exponents[i];
      const auto& b = t.exponents[j];
      const double v = ball_monomial_integral(a[0] + b[0], a[1] + b[1], a[2] + b[2], weight);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

}  // namespace

GalerkinPencil assemble_pencil(const PolyBasis& basis, const Vec3& omega, double nsq,
                               GhatMode mode, const Vec3& ghat) {
  const MonomialTable t = MonomialTable::build(basis.degree);
  const int m = t.size();
  const int n = basis.dim();

  // Component blocks B_i (m x n) of the basis coefficients.
  std::array<Eigen::MatrixXd, 3> comp;
  for (int i = 0; i < 3; ++i) comp[i] = basis.basis_matrix.middleRows(i * m, m);

  const Eigen::MatrixXd gram = monomial_gram(t, Weight::kOne);
  std::array<Eigen::MatrixXd, 3> gram_comp;  // gram * B_i, reused below
  for (int i = 0; i < 3; ++i) gram_comp[i] = gram * comp[i];

  GalerkinPencil pencil;
  pencil.degree = basis.degree;
  pencil.omega = omega;
  pencil.nsq = nsq;
  pencil.ghat_mode = mode;

  pencil.mass = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < 3; ++i) pencil.mass += comp[i].transpose() * gram_comp[i];

  pencil.coriolis = Eigen::MatrixXd::Zero(n, n);
  if (omega.norm() > 0.0) {
    // C_ij = int u_i . (Omega x u_j): sum of epsilon_{pqr} Omega_q B_p^T G B_r.
    // kEps[p][r] = s encodes q = |s| - 1 and sign(s) = epsilon_{pqr}.
    static constexpr int kEps[3][3] = {{0, -3, 2}, {3, 0, -1}, {-2, 1, 0}};
    for (int p = 0; p < 3; ++p) {
      for (int r = 0; r < 3; ++r) {
        const int s = kEps[p][r];
        if (s == 0) continue;
        const int q = std::abs(s) - 1;
        const double sign = s > 0 ? 1.0 : -1.0;
        if (omega(q) == 0.0) continue;
        pencil.coriolis += (sign * omega(q)) * (comp[p].transpose() * gram_comp[r]);
      }
    }
  }

  pencil.buoyancy = Eigen::MatrixXd::Zero(n, n);
  if (nsq != 0.0) {
    if (mode == GhatMode::kConstant) {
      if (ghat.norm() == 0.0) {
        throw std::invalid_argument("assemble_pencil: constant ghat must be nonzero");
      }
      const Vec3 gh = ghat.normalized();
      pencil.ghat = gh;
      // (ghat . u_i)(ghat . u_j) expands over component pairs.
      for (int p = 0; p < 3; ++p) {
        for (int r = 0; r < 3; ++r) {
          if (gh(p) == 0.0 || gh(r) == 0.0) continue;
          pencil.buoyancy += (nsq * gh(p) * gh(r)) * (comp[p].transpose() * gram_comp[r]);
        }
      }
    } else {
      // Radial: integrand N^2 (x . u_i)(x . u_j) / |x|^2 via the 1/r^2 weight.
      const MonomialTable t1 = MonomialTable::build(basis.degree + 1);
      const int m1 = t1.size();
      Eigen::MatrixXd radial = Eigen::MatrixXd::Zero(m1, n);
      for (int i = 0; i < 3; ++i) {
        // Multiply component i by x_i: shift exponents.
        Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(m1, m);
        for (int j = 0; j < m; ++j) {
          auto e = t.exponents[j];
          e[i] += 1;
          shift(t1.index(e[0], e[1], e[2]), j) = 1.0;
        }
        radial += shift * comp[i];
      }
      const Eigen::MatrixXd gram2 = monomial_gram(t1, Weight::kInvR2);
      pencil.buoyancy = nsq * (radial.transpose() * gram2 * radial);
    }
  }
  return pencil;
}

linalg::EigenResult solve_modes(const GalerkinPencil& pencil) {
  return linalg::solve_quadratic_pencil(pencil.mass.cast<Complex>(),
                                        pencil.coriolis.cast<Complex>(),
                                        pencil.buoyancy.cast<Complex>());
}

namespace {

// M-normalized companion linearization of the pencil.
Eigen::MatrixXcd linearization(const GalerkinPencil& pencil) {
  const Eigen::Index n = pencil.mass.rows();
  Eigen::LLT<Eigen::MatrixXd> llt(pencil.mass);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("galerkin: mass matrix is not positive definite");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  auto whiten = [&](const Eigen::MatrixXd& x) {
    Eigen::MatrixXd t = l.triangularView<Eigen::Lower>().solve(x);
    return Eigen::MatrixXd(l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose());
  };
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  a.topRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  a.bottomLeftCorner(n, n) = -whiten(pencil.buoyancy).cast<Complex>();
  a.bottomRightCorner(n, n) = -2.0 * whiten(pencil.coriolis).cast<Complex>();
  return a;
}

}  // namespace

Eigen::MatrixXcd riesz_projector(const GalerkinPencil& pencil, Complex center, double radius,
                                 int quad_points) {
  if (quad_points < 16) throw std::invalid_argument("riesz_projector: quad_points must be >= 16");
  if (!(radius > 0.0)) throw std::invalid_argument("riesz_projector: radius must be positive");
  const Eigen::MatrixXcd a = linearization(pencil);
  const Eigen::Index dim = a.rows();

  // Contour safety margin against the pencil eigenvalues.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(a, /*computeEigenvectors=*/false);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double gap = std::abs(std::abs(eig.eigenvalues()(i) - center) - radius);
    if (gap < 1e-3 * radius) {
      throw std::runtime_error("riesz_projector: eigenvalue too close to the contour");
    }
  }

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (int k = 0; k < quad_points; ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / quad_points;
    const Complex w = std::polar(1.0, theta);
    const Complex mu = center + radius * w;
    p += w * (mu * id - a).partialPivLu().solve(id);
  }
  return (radius / static_cast<double>(quad_points)) * p;
}

Eigen::MatrixXd pseudospectrum_scan(const GalerkinPencil& pencil, const PseudospectrumGrid& grid) {
  if (grid.n_re < 1 || grid.n_im < 1) {
    throw std::invalid_argument("pseudospectrum_scan: grid must be nonempty");
  }
  const Eigen::MatrixXcd m = pencil.mass.cast<Complex>();
  const Eigen::MatrixXcd c = pencil.coriolis.cast<Complex>();
  const Eigen::MatrixXcd k = pencil.buoyancy.cast<Complex>();
  const double nm = linalg::spectral_norm(m);
  const double nc = linalg::spectral_norm(c);
  const double nk = linalg::spectral_norm(k);

  Eigen::MatrixXd out(grid.n_im, grid.n_re);
  parallel_for(static_cast<std::size_t>(grid.n_im) * grid.n_re, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / grid.n_re;
    const int j = static_cast<int>(idx) % grid.n_re;
    const double im =
        grid.n_im == 1 ? grid.im_min
                       : grid.im_min + (grid.im_max - grid.im_min) * i / (grid.n_im - 1.0);
    const double re =
        grid.n_re == 1 ? grid.re_min
                       : grid.re_min + (grid.re_max - grid.re_min) * j / (grid.n_re - 1.0);
    const Complex lam(re, im);
    const Eigen::MatrixXcd pm = (lam * lam) * m + (2.0 * lam) * c + k;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pm);
    const double denom = std::norm(lam) * nm + std::abs(lam) * nc + nk;
    out(i, j) = denom > 0.0 ? svd.singularValues().tail(1)(0) / denom : 0.0;
  });
  return out;
}

}  // namespace gispec::galerkin
