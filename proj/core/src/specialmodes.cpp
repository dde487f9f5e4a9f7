#include "gispec/specialmodes.hpp"

#include <cmath>
#include <stdexcept>

namespace gispec::specialmodes {

namespace {

// Bilinear dot product (no conjugation), matching the algebraic identities.
Complex cdot(const Vec3& a, const CVec3& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

CVec3 real_cross(const Vec3& a, const CVec3& b) { return a.cast<Complex>().cross(b); }

void require_equatorial_inputs(const Vec3& omega, const Vec3& a) {
  if (omega.norm() == 0.0) {
    throw std::invalid_argument("rigid_mode: |Omega| > 0 required for this kind");
  }
  if (a.norm() == 0.0) {
    throw std::invalid_argument("rigid_mode: direction a must be nonzero");
  }
  if (std::abs(a.dot(omega)) > 1e-12 * a.norm() * omega.norm()) {
    throw std::invalid_argument("rigid_mode: a must be orthogonal to Omega");
  }
}

// a +- i (Omega x a) / |Omega|
CVec3 circular_combination(const Vec3& omega, const Vec3& a, double sign) {
  return a.cast<Complex>() + Complex(0.0, sign) * (omega.cross(a) / omega.norm()).cast<Complex>();
}

}  // namespace

RigidMode rigid_mode(const Vec3& omega, RigidKind kind, const Vec3& a) {
  RigidMode mode;
  mode.kind = kind;
  mode.t = CVec3::Zero();
  mode.k = CVec3::Zero();
  mode.lambda = Complex(0.0, 0.0);
  const double om = omega.norm();
  switch (kind) {
    case RigidKind::kAxialTranslation:
      mode.t = omega.cast<Complex>();
      break;
    case RigidKind::kAxialSpin:
      mode.k = omega.cast<Complex>();
      break;
    case RigidKind::kEquatorialTranslationPlus:
      require_equatorial_inputs(omega, a);
      mode.t = circular_combination(omega, a, +1.0);
      mode.lambda = Complex(0.0, om);
      break;
    case RigidKind::kEquatorialTranslationMinus:
      require_equatorial_inputs(omega, a);
      mode.t = circular_combination(omega, a, -1.0);
      mode.lambda = Complex(0.0, -om);
      break;
    case RigidKind::kTiltoverPlus:
      require_equatorial_inputs(omega, a);
      mode.k = circular_combination(omega, a, +1.0);
      mode.lambda = Complex(0.0, om);
      break;
    case RigidKind::kTiltoverMinus:
      require_equatorial_inputs(omega, a);
      mode.k = circular_combination(omega, a, -1.0);
      mode.lambda = Complex(0.0, -om);
      break;
  }
  return mode;
}

CVec3 rigid_field(const RigidMode& mode, const Vec3& x) {
  return mode.t + mode.k.cross(x.cast<Complex>());
}

CVec3 rigid_residual(const Vec3& omega, const RigidMode& mode, const Vec3& x) {
  const CVec3 u = rigid_field(mode, x);
  const double om2 = omega.squaredNorm();
  const CVec3 k_cross_x = mode.k.cross(x.cast<Complex>());
  const CVec3 a2u = cdot(omega, mode.t) * omega.cast<Complex>() +
                    cdot(omega, k_cross_x) * omega.cast<Complex>() -
                    om2 * mode.t -
                    omega.dot(x) * mode.k.cross(omega.cast<Complex>());
  return mode.lambda * mode.lambda * u + 2.0 * mode.lambda * real_cross(omega, u) + a2u;
}

Vec3 GeostrophicField::eval(const model::PlanetModel& m, const Vec3& x) const {
  const auto bg = model::eval_background_unchecked(m, x);
  return poly::gradient(phi, x).cross(bg.stilde) / bg.rho0;
}

namespace {

// stilde = c(r) x for radial-gravity models, with c = -rho0 N^2 / (r |g|).
double stilde_coefficient(const model::PlanetModel& m, double r) {
  const double nsq = m.nsq.eval(r);
  if (nsq == 0.0) return 0.0;
  const double gmag = m.gravity.profile.eval(r);
  if (r * gmag == 0.0) {
    throw model::ModelError("geostrophic: gravity direction undefined where N^2 != 0");
  }
  return -m.rho0.eval(r) * nsq / (r * gmag);
}

double stilde_coefficient_deriv(const model::PlanetModel& m, double r) {
  const double nsq = m.nsq.eval(r), dnsq = m.nsq.deriv(r);
  if (nsq == 0.0 && dnsq == 0.0) return 0.0;
  const double rho = m.rho0.eval(r), drho = m.rho0.deriv(r);
  const double g = m.gravity.profile.eval(r), dg = m.gravity.profile.deriv(r);
  const double den = r * g;
  if (den == 0.0) {
    throw model::ModelError("geostrophic: gravity direction undefined where N^2 varies");
  }
  const double num = rho * nsq;
  const double dnum = drho * nsq + rho * dnsq;
  const double dden = g + r * dg;
  return -(dnum * den - num * dden) / (den * den);
}

// Same for the velocity weight q(r) = c(r) / rho0(r) = -N^2 / (r |g|).
double q_coefficient(const model::PlanetModel& m, double r) {
  const double nsq = m.nsq.eval(r);
  if (nsq == 0.0) return 0.0;
  const double gmag = m.gravity.profile.eval(r);
  if (r * gmag == 0.0) {
    throw model::ModelError("geostrophic: gravity direction undefined where N^2 != 0");
  }
  return -nsq / (r * gmag);
}

double q_coefficient_deriv(const model::PlanetModel& m, double r) {
  const double nsq = m.nsq.eval(r), dnsq = m.nsq.deriv(r);
  if (nsq == 0.0 && dnsq == 0.0) return 0.0;
  const double g = m.gravity.profile.eval(r), dg = m.gravity.profile.deriv(r);
  const double den = r * g;
  if (den == 0.0) {
    throw model::ModelError("geostrophic: gravity direction undefined where N^2 varies");
  }
  const double dden = g + r * dg;
  return -(dnsq * den - nsq * dden) / (den * den);
}

}  // namespace

GeostrophicResiduals geostrophic_residual(const model::PlanetModel& m,
                                          const poly::Polynomial& phi, const Vec3& x) {
  if (m.gravity.mode != model::Gravity::Mode::kRadial) {
    throw model::ModelError(
        "geostrophic_residual: requires a radial-gravity model (level surfaces of rho0 must be "
        "parallel to the boundary)");
  }
  if (phi.degree() > 8) {
    throw std::invalid_argument("geostrophic_residual: phi degree must be <= 8");
  }

  GeostrophicResiduals res;
  const auto bg = model::eval_background_unchecked(m, x);
  const Vec3 grad_phi = poly::gradient(phi, x);
  const Vec3 u = grad_phi.cross(bg.stilde) / bg.rho0;
  res.stilde_dot_u = bg.stilde.dot(u);

  const bool exact = m.rho0.is_polynomial() && m.nsq.is_polynomial() &&
                     m.gravity.profile.is_polynomial();
  const double r = x.norm();
  const auto g_field = poly::grad_cross_position(phi);  // grad(phi) x position
  const poly::Polynomial div_g = poly::divergence(g_field);

  if (exact && r > 0.0) {
    const Vec3 g_at_x(g_field[0].eval(x), g_field[1].eval(x), g_field[2].eval(x));
    const double radial_part = x.dot(g_at_x) / r;  // x_hat . (grad phi x x)
    res.divergence_rho_u =
        stilde_coefficient_deriv(m, r) * radial_part + stilde_coefficient(m, r) * div_g.eval(x);
    if (m.domain.boundary_distance(x) <= 1e-6) {
      res.boundary_div_u =
          q_coefficient_deriv(m, r) * radial_part + q_coefficient(m, r) * div_g.eval(x);
    }
  } else {
    const double h = 1e-5;
    auto rho_u = [&](const Vec3& p) {
      const auto b = model::eval_background_unchecked(m, p);
      return Vec3(poly::gradient(phi, p).cross(b.stilde));
    };
    auto vel = [&](const Vec3& p) {
      const auto b = model::eval_background_unchecked(m, p);
      return Vec3(poly::gradient(phi, p).cross(b.stilde) / b.rho0);
    };
    double div_rho_u = 0.0, div_u = 0.0;
    for (int i = 0; i < 3; ++i) {
      Vec3 dx = Vec3::Zero();
      dx(i) = h;
      div_rho_u += (rho_u(x + dx)(i) - rho_u(x - dx)(i)) / (2.0 * h);
      div_u += (vel(x + dx)(i) - vel(x - dx)(i)) / (2.0 * h);
    }
    res.divergence_rho_u = div_rho_u;
    if (m.domain.boundary_distance(x) <= 1e-6) res.boundary_div_u = div_u;
  }
  return res;
}

}  // namespace gispec::specialmodes
