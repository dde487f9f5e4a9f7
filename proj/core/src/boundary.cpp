#include "gispec/boundary.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "gispec/symbol.hpp"

namespace gispec::boundary {

namespace {

constexpr double kSingularRatio = 1e-9;

// Block offsets of the 16-component unknown (w_u, z_u, psi_u, w_v, z_v,
// psi_v, phi_v, phi_t) and of the eight equation rows.
constexpr int kWu = 0, kZu = 3, kPsiU = 6, kWv = 7, kZv = 10, kPsiV = 13, kPhiV = 14, kPhiT = 15;
constexpr int kR1 = 0, kR2 = 1, kR3 = 4, kR4 = 5, kR5 = 6, kR6 = 9, kR7 = 10, kR8 = 13;

struct FrozenPoint {
  Vec3 omega;
  double nsq = 0.0;
  Vec3 ghat;
  bool g_defined = false;
  Vec3 g;
  double csq = 1.0;
};

FrozenPoint freeze(const model::PlanetModel& m, const Vec3& x) {
  const auto bg = model::eval_background(m, x);
  return {m.omega, bg.nsq, bg.ghat, bg.g_defined, bg.g, bg.csq};
}

CMat3 numeric_inverse(const CMat3& a, bool& ok) {
  Eigen::JacobiSVD<CMat3> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  ok = sv(0) > 0.0 && sv(2) > kSingularRatio * sv(0);
  if (!ok) return CMat3::Zero();
  return svd.matrixV() * sv.cwiseInverse().asDiagonal() * svd.matrixU().adjoint();
}

// alpha_+- from the closed form; Vtn_inv is Vtilde_n^-1.
std::pair<Complex, Complex> alpha_closed_form(const CMat3& v, const CMat3& vtn_inv, const Vec3& n,
                                              const Vec3& xihat, double xi_norm) {
  const CVec3 cn = n.cast<Complex>();
  const CVec3 cx = xihat.cast<Complex>();
  const CMat3 pperp = perp_projector_unit(n).cast<Complex>();
  const Complex s1 = cn.transpose() * v * pperp * vtn_inv * cx;
  const Complex s2 = cx.transpose() * vtn_inv * pperp * v * cn;
  const Complex q = cx.transpose() * vtn_inv * cx;
  const Complex r =
      cn.transpose() * (v - v * pperp * vtn_inv * pperp * v) * cn;
  const Complex root = std::sqrt((s1 - s2) * (s1 - s2) - 4.0 * q * r);
  const Complex pref = Complex(0.0, 1.0) * xi_norm * 0.5;
  return {pref * (s1 + s2 - root), pref * (s1 + s2 + root)};
}

}  // namespace

BoundaryFrame make_frame(const model::PlanetModel& m, const Vec3& x, const Vec3& tangent_hint) {
  BoundaryFrame f;
  f.x = x;
  f.n = model::boundary_normal(m, x);
  Vec3 t = tangent_hint - tangent_hint.dot(f.n) * f.n;
  if (t.norm() < 1e-12) {
    // Hint parallel to the normal: pick any tangent deterministically.
    const Vec3 seed = std::abs(f.n.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
    t = seed - seed.dot(f.n) * f.n;
  }
  f.xihat = t.normalized();
  f.nperp = f.xihat.cross(f.n);
  return f;
}

CMat3 v_matrix(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined, Complex lambda) {
  CMat3 v = (lambda * lambda) * CMat3::Identity() +
            (2.0 * lambda) * cross_matrix(omega).cast<Complex>();
  if (nsq != 0.0) {
    if (!g_defined) {
      throw std::invalid_argument("v_matrix: N^2 != 0 requires a defined gravity direction");
    }
    v += Complex(nsq, 0.0) * (ghat * ghat.transpose()).cast<Complex>();
  }
  return v;
}

CMat3 vtilde(const CMat3& v, const Vec3& unit_dir) {
  const CMat3 pperp = perp_projector_unit(unit_dir).cast<Complex>();
  const CMat3 ppar = (unit_dir * unit_dir.transpose()).cast<Complex>();
  return pperp * v * pperp + ppar;
}

CMat3 vtilde_inverse(const model::PlanetModel& m, const Vec3& x, Complex lambda) {
  const auto pt = freeze(m, x);
  const Vec3 n = model::boundary_normal(m, x);
  const double omega_n = pt.omega.dot(n);

  Vec3 b = Vec3::Zero();  // P_n_perp ghat
  double b2 = 0.0;
  if (pt.g_defined) {
    b = pt.ghat - pt.ghat.dot(n) * n;
    b2 = b.squaredNorm();
  }
  const double nb2 = pt.nsq != 0.0 ? pt.nsq * b2 : 0.0;
  if (pt.nsq != 0.0 && !pt.g_defined) {
    throw std::invalid_argument("vtilde_inverse: N^2 != 0 requires a defined gravity direction");
  }

  const Complex denom = std::pow(lambda, 4) + lambda * lambda * (nb2 + 4.0 * omega_n * omega_n);
  const double scale = std::pow(std::abs(lambda), 4) + std::norm(lambda) * (std::abs(nb2) + 4.0 * omega_n * omega_n);
  if (std::abs(denom) <= 1e-12 * std::max(scale, 1.0)) {
    throw std::runtime_error("vtilde_inverse: degenerate denominator, lambda is in the pointwise "
                             "non-elliptic set at xi = n");
  }

  const CMat3 pn = (n * n.transpose()).cast<Complex>();
  const CMat3 pperp = perp_projector_unit(n).cast<Complex>();
  CMat3 numer = (lambda * lambda) * pperp -
                (2.0 * lambda * omega_n) * cross_matrix(n).cast<Complex>();
  if (nb2 != 0.0) {
    const Vec3 bh = b / std::sqrt(b2);
    const CMat3 pbperp = perp_projector_unit(bh).cast<Complex>();
    numer += Complex(nb2, 0.0) * pperp * pbperp * pperp;
  }
  return pn + numer / denom;
}

Complex lopatinskii_indicator(const model::PlanetModel& m, const Vec3& x, const Vec3& xihat,
                              Complex lambda) {
  const auto pt = freeze(m, x);
  const Vec3 n = model::boundary_normal(m, x);
  if (std::abs(xihat.dot(n)) > 1e-8 || std::abs(xihat.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("lopatinskii_indicator: xihat must be a unit tangent vector");
  }
  const double omega_n = pt.omega.dot(n);

  double b2 = 0.0;
  double proj = 0.0;  // xihat^T P_{(P_n_perp ghat)}_perp xihat
  if (pt.g_defined) {
    const Vec3 b = pt.ghat - pt.ghat.dot(n) * n;
    b2 = b.squaredNorm();
    if (b2 > 0.0) {
      const Vec3 bh = b / std::sqrt(b2);
      const double c = xihat.dot(bh);
      proj = 1.0 - c * c;
    }
  }
  const double nb2 = pt.nsq != 0.0 ? pt.nsq * b2 : 0.0;
  if (pt.nsq != 0.0 && !pt.g_defined) {
    throw std::invalid_argument("lopatinskii_indicator: N^2 != 0 requires gravity direction");
  }

  const Complex denom = std::pow(lambda, 4) + lambda * lambda * (nb2 + 4.0 * omega_n * omega_n);
  const double scale = std::pow(std::abs(lambda), 4) + std::norm(lambda) * (std::abs(nb2) + 4.0 * omega_n * omega_n);
  if (std::abs(denom) <= 1e-12 * std::max(scale, 1.0)) {
    throw std::runtime_error("lopatinskii_indicator: degenerate denominator");
  }
  return (lambda * lambda + nb2 * proj) / denom;
}

BigSymbol assemble_big_symbol(const model::PlanetModel& m, const BoundaryFrame& frame,
                              const Vec3& xi, Complex lambda) {
  if (xi.norm() == 0.0) throw std::invalid_argument("assemble_big_symbol: xi must be nonzero");
  const auto pt = freeze(m, frame.x);

  const CMat3 v = v_matrix(pt.omega, pt.nsq, pt.ghat, pt.g_defined, lambda);
  const CMat3 cx = cross_matrix(xi).cast<Complex>();
  const CVec3 cxi = xi.cast<Complex>();
  const Eigen::RowVector3cd g_over_c2 = (pt.g / pt.csq).transpose().cast<Complex>();

  BigSymbol sym;
  sym.frame = frame;
  sym.xi = xi;
  sym.lambda = lambda;
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(16, 16);

  f.block<1, 3>(kR1, kWu) = g_over_c2 * cx;
  f.block<1, 3>(kR1, kZu) = cxi.transpose();
  f.block<3, 3>(kR2, kZu) = cx;
  f.block<3, 1>(kR2, kPsiU) = cxi;
  f.block<1, 3>(kR3, kWu) = cxi.transpose();
  f.block<1, 3>(kR4, kWv) = g_over_c2 * cx;
  f.block<1, 3>(kR4, kZv) = cxi.transpose();
  f.block<3, 3>(kR5, kZv) = cx;
  f.block<3, 1>(kR5, kPsiV) = cxi;
  f.block<1, 3>(kR6, kWv) = cxi.transpose();
  f.block<3, 3>(kR7, kWu) = v * cx;
  f.block<3, 3>(kR7, kWv) = -cx;
  f.block<3, 1>(kR7, kPhiV) = cxi;
  f.block<3, 3>(kR8, kWv) = cx;
  f.block<3, 1>(kR8, kPhiT) = cxi;
  sym.forward = f;

  // Closed-form inverse, valid when Vtilde_xi = P_perp V P_perp + P_xi is
  // invertible, i.e. lambda outside sigma_pt(x, xi).
  const Vec3 u = xi.normalized();
  const CMat3 vt = vtilde(v, u);
  bool ok = false;
  const CMat3 vt_inv = numeric_inverse(vt, ok);
  if (!ok) return sym;

  const CMat3 pperp = perp_projector_unit(u).cast<Complex>();
  const CMat3 ppar = (u * u.transpose()).cast<Complex>();
  const CMat3 v_par_perp = ppar * v * pperp;  // V_{xi xi_perp}
  const double xi2 = xi.squaredNorm();

  Eigen::MatrixXcd inv = Eigen::MatrixXcd::Zero(16, 16);
  inv.block<3, 1>(kWu, kR3) = cxi;
  inv.block<3, 3>(kWu, kR7) = -cx * vt_inv;
  inv.block<3, 3>(kWu, kR8) = -cx * vt_inv;
  inv.block<3, 1>(kZu, kR1) = cxi;
  inv.block<3, 3>(kZu, kR2) = -cx;
  inv.block<3, 3>(kZu, kR7) = -cxi * (g_over_c2 * pperp * vt_inv);
  inv.block<3, 3>(kZu, kR8) = -cxi * (g_over_c2 * pperp * vt_inv);
  inv.block<1, 3>(kPsiU, kR2) = cxi.transpose();
  inv.block<3, 1>(kWv, kR6) = cxi;
  inv.block<3, 3>(kWv, kR8) = -cx;
  inv.block<3, 1>(kZv, kR4) = cxi;
  inv.block<3, 3>(kZv, kR5) = -cx;
  inv.block<3, 3>(kZv, kR8) = -cxi * (g_over_c2 * pperp);
  inv.block<1, 3>(kPsiV, kR5) = cxi.transpose();
  inv.block<1, 3>(kPhiV, kR7) = cxi.transpose() * (CMat3::Identity() - v_par_perp) * vt_inv;
  inv.block<1, 3>(kPhiV, kR8) = -cxi.transpose() * v_par_perp * vt_inv * pperp;
  inv.block<1, 3>(kPhiT, kR8) = cxi.transpose();
  sym.inverse = inv / xi2;
  return sym;
}

OdeEigs ode_matrix_eigs(const model::PlanetModel& m, const BoundaryFrame& frame, Complex lambda,
                        double xi_norm) {
  if (!(xi_norm > 0.0)) throw std::invalid_argument("ode_matrix_eigs: xi_norm must be positive");
  const Vec3 xit = xi_norm * frame.xihat;

  const auto sym_n = assemble_big_symbol(m, frame, frame.n, lambda);
  if (!sym_n.inverse) {
    throw std::runtime_error("ode_matrix_eigs: symbol not invertible at xi = n "
                             "(interior ellipticity fails there)");
  }
  const auto sym_t = assemble_big_symbol(m, frame, xit, lambda);
  const Eigen::MatrixXcd k = Complex(0.0, -1.0) * (*sym_n.inverse) * sym_t.forward;

  OdeEigs out;
  const auto eig = linalg::eig_complex(k);
  out.raw = eig.eigenvalues;

  const auto pt = freeze(m, frame.x);
  const CMat3 v = v_matrix(pt.omega, pt.nsq, pt.ghat, pt.g_defined, lambda);
  const CMat3 vtn_inv = vtilde_inverse(m, frame.x, lambda);
  out.alphas = alpha_closed_form(v, vtn_inv, frame.n, frame.xihat, xi_norm);

  const double tol = 1e-6 * xi_norm;
  const Complex plus(xi_norm, 0.0), minus(-xi_norm, 0.0);
  out.generic = std::min({std::abs(out.alphas.first - plus), std::abs(out.alphas.first - minus),
                          std::abs(out.alphas.second - plus),
                          std::abs(out.alphas.second - minus)}) > tol;

  // Greedy clustering of the raw eigenvalues against the expected multiset.
  // Defective clusters scatter like a fractional power of machine epsilon, so
  // the degenerate 8/8 case gets a looser practical tolerance.
  const double cluster_tol = out.generic ? tol : 1e-4 * xi_norm;
  int n_plus = 0, n_minus = 0, n_a1 = 0, n_a2 = 0, unmatched = 0;
  for (Eigen::Index i = 0; i < out.raw.size(); ++i) {
    const Complex e = out.raw(i);
    if (std::abs(e - plus) <= cluster_tol) {
      ++n_plus;
    } else if (std::abs(e - minus) <= cluster_tol) {
      ++n_minus;
    } else if (out.generic && std::abs(e - out.alphas.first) <= cluster_tol) {
      ++n_a1;
    } else if (out.generic && std::abs(e - out.alphas.second) <= cluster_tol) {
      ++n_a2;
    } else {
      ++unmatched;
    }
  }
  out.plus_multiplicity = n_plus;
  out.minus_multiplicity = n_minus;
  out.clustering_ok = unmatched == 0 && (out.generic ? (n_plus == 7 && n_minus == 7 && n_a1 == 1 && n_a2 == 1)
                                                     : (n_plus == 8 && n_minus == 8));
  return out;
}

std::pair<double, double> boundary_failure_interval(const model::PlanetModel& m, const Vec3& x) {
  const auto pt = freeze(m, x);
  const Vec3 n = model::boundary_normal(m, x);
  double b = 0.0;
  if (pt.g_defined) b = (pt.ghat - pt.ghat.dot(n) * n).norm();
  const double h = b * std::sqrt(std::max(0.0, pt.nsq));
  return {-h, h};
}

LopatinskiiReport lopatinskii_report(const model::PlanetModel& m, const Vec3& x,
                                     const Vec3& xihat, Complex lambda) {
  LopatinskiiReport rep;
  const auto pt = freeze(m, x);
  const Vec3 n = model::boundary_normal(m, x);

  // Pointwise interior set at x: the real segment and the imaginary band.
  const auto [bm, bp] = symbol::beta_pm_fields(pt.omega, pt.nsq, pt.ghat, pt.g_defined);
  const double real_hw = std::sqrt(std::max(0.0, -pt.nsq));
  const double im_lo = std::sqrt(std::max(0.0, bm));
  const double im_hi = std::sqrt(bp);
  const double re = lambda.real(), im = std::abs(lambda.imag());
  const double d_real = std::hypot(std::abs(im - 0.0), std::max(0.0, std::abs(re) - real_hw));
  const double d_imag =
      std::hypot(std::abs(re), std::max({0.0, im_lo - im, im - im_hi}));
  const double tol = 1e-9 * (1.0 + std::abs(lambda));
  rep.interior_elliptic = std::min(d_real, d_imag) > tol;

  rep.vtilde_inv = vtilde_inverse(m, x, lambda);
  rep.indicator = lopatinskii_indicator(m, x, xihat, lambda);

  const CMat3 v = v_matrix(pt.omega, pt.nsq, pt.ghat, pt.g_defined, lambda);
  rep.alphas = alpha_closed_form(v, rep.vtilde_inv, n, xihat, 1.0);

  // Failure is a zero of the indicator numerator.
  double b2 = 0.0, proj = 0.0;
  if (pt.g_defined) {
    const Vec3 b = pt.ghat - pt.ghat.dot(n) * n;
    b2 = b.squaredNorm();
    if (b2 > 0.0) {
      const double c = xihat.dot(b / std::sqrt(b2));
      proj = 1.0 - c * c;
    }
  }
  const double nb2 = pt.nsq != 0.0 ? pt.nsq * b2 : 0.0;
  const Complex numer = lambda * lambda + nb2 * proj;
  rep.boundary_elliptic =
      rep.interior_elliptic && std::abs(numer) > 1e-9 * (std::norm(lambda) + std::abs(nb2) + 1e-300);
  return rep;
}

}  // namespace gispec::boundary
