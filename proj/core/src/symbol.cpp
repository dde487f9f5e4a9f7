#include "gispec/symbol.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace gispec::symbol {

namespace {

double perp_ghat_sq(const Vec3& ghat, const Vec3& xi_hat) {
  const double c = ghat.dot(xi_hat);
  return std::max(0.0, ghat.squaredNorm() - c * c);
}

void require_nonzero_xi(const Vec3& xi) {
  if (xi.norm() == 0.0) throw std::invalid_argument("symbol: xi must be nonzero");
}

void require_ghat(double nsq, bool g_defined) {
  if (nsq != 0.0 && !g_defined) {
    throw std::invalid_argument("symbol: N^2 != 0 requires a defined gravity direction");
  }
}

}  // namespace

Mat3 projector_perp(const Vec3& xi) {
  require_nonzero_xi(xi);
  const Vec3 u = xi.normalized();
  return perp_projector_unit(u);
}

CMat3 symbol_matrix_fields(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined,
                           const Vec3& xi, Complex lambda) {
  require_nonzero_xi(xi);
  require_ghat(nsq, g_defined);
  const Mat3 p = projector_perp(xi);
  CMat3 core = (lambda * lambda) * CMat3::Identity() +
               (2.0 * lambda) * cross_matrix(omega).cast<Complex>();
  if (nsq != 0.0) core += Complex(nsq, 0.0) * (ghat * ghat.transpose()).cast<Complex>();
  return p.cast<Complex>() * core * p.cast<Complex>();
}

PointSpectrum sigma_pt_fields(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined,
                              const Vec3& xi) {
  require_nonzero_xi(xi);
  require_ghat(nsq, g_defined);
  const Vec3 xh = xi.normalized();
  const double omega_xi = omega.dot(xh);
  const double radicand =
      4.0 * omega_xi * omega_xi + (nsq != 0.0 ? nsq * perp_ghat_sq(ghat, xh) : 0.0);

  PointSpectrum s;
  const auto [bm, bp] = beta_pm_fields(omega, nsq, ghat, g_defined);
  s.beta_minus = bm;
  s.beta_plus = bp;
  s.values.push_back(Complex(0.0, 0.0));
  if (radicand > 0.0) {
    const double mu = std::sqrt(radicand);
    s.values.emplace_back(0.0, mu);
    s.values.emplace_back(0.0, -mu);
  } else if (radicand < 0.0) {
    const double mu = std::sqrt(-radicand);
    s.values.emplace_back(mu, 0.0);
    s.values.emplace_back(-mu, 0.0);
  }
  return s;
}

std::pair<double, double> beta_pm_fields(const Vec3& omega, double nsq, const Vec3& ghat,
                                         bool g_defined) {
  require_ghat(nsq, g_defined);
  const double om2 = omega.squaredNorm();
  const double og = g_defined ? omega.dot(ghat) : 0.0;
  const double a = 4.0 * om2 + nsq;
  const double disc = std::max(0.0, a * a - 16.0 * og * og * nsq);
  const double root = std::sqrt(disc);
  return {0.5 * (a - root), 0.5 * (a + root)};
}

Complex scalar_poincare_symbol_fields(const Vec3& omega, double nsq, const Vec3& ghat,
                                      bool g_defined, const Vec3& xi, Complex lambda) {
  require_nonzero_xi(xi);
  require_ghat(nsq, g_defined);
  const Vec3 xh = xi.normalized();
  const double omega_xi = omega.dot(xh);
  const double q = 4.0 * omega_xi * omega_xi + (nsq != 0.0 ? nsq * perp_ghat_sq(ghat, xh) : 0.0);
  return Complex(0.0, -1.0) * lambda * xi.squaredNorm() * (lambda * lambda + q);
}

PointSymbol symbol_matrix(const model::PlanetModel& m, const Vec3& x, const Vec3& xi,
                          Complex lambda) {
  const auto bg = model::eval_background(m, x);
  PointSymbol p;
  p.x = x;
  p.xi = xi;
  p.lambda = lambda;
  p.matrix = symbol_matrix_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined, xi, lambda);
  return p;
}

PointSpectrum sigma_pt(const model::PlanetModel& m, const Vec3& x, const Vec3& xi) {
  const auto bg = model::eval_background(m, x);
  return sigma_pt_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined, xi);
}

std::pair<double, double> beta_pm(const model::PlanetModel& m, const Vec3& x) {
  const auto bg = model::eval_background(m, x);
  return beta_pm_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined);
}

Complex scalar_poincare_symbol(const model::PlanetModel& m, const Vec3& x, const Vec3& xi,
                               Complex lambda) {
  const auto bg = model::eval_background(m, x);
  return scalar_poincare_symbol_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined, xi, lambda);
}

double rank_deficiency_ratio(const CMat3& symbol) {
  Eigen::JacobiSVD<CMat3> svd(symbol);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(1) / sv(0);
}

}  // namespace gispec::symbol
