#pragma once

#include <optional>

#include "gispec/model.hpp"
#include "gispec/poly.hpp"
#include "gispec/types.hpp"

namespace gispec::specialmodes {

enum class RigidKind {
  kAxialTranslation,
  kAxialSpin,
  kEquatorialTranslationPlus,
  kEquatorialTranslationMinus,
  kTiltoverPlus,
  kTiltoverMinus,
};

/// Zero-strain displacement u(x) = t + k x x with its pencil eigenvalue.
struct RigidMode {
  RigidKind kind;
  CVec3 t;
  CVec3 k;
  Complex lambda;
};

/// The six quasi-rigid constructions. Equatorial and tilt-over kinds require
/// |Omega| > 0 and a nonzero vector a orthogonal to Omega.
RigidMode rigid_mode(const Vec3& omega, RigidKind kind, const Vec3& a = Vec3::Zero());

CVec3 rigid_field(const RigidMode& mode, const Vec3& x);

/// L(lambda) u at x with the centrifugal part of A2 expanded in closed form:
/// A2 u = (Omega.t) Omega + (Omega.(k x x)) Omega - |Omega|^2 t
///        - (Omega.x) (k x Omega).
CVec3 rigid_residual(const Vec3& omega, const RigidMode& mode, const Vec3& x);

/// lambda = 0 flow along density level surfaces, u = rho0^-1 grad(phi) x stilde.
struct GeostrophicField {
  poly::Polynomial phi;
  Vec3 eval(const model::PlanetModel& m, const Vec3& x) const;
};

struct GeostrophicResiduals {
  double stilde_dot_u = 0.0;
  double divergence_rho_u = 0.0;
  std::optional<double> boundary_div_u;  // present when x is on the boundary
};

/// Residuals of the three defining conditions at x. Requires a radial-gravity
/// model (the parallelism hypothesis); phi of degree <= 8. Divergences use
/// exact polynomial differentiation when the profiles are polynomial, else
/// central differences with h = 1e-5.
GeostrophicResiduals geostrophic_residual(const model::PlanetModel& m,
                                          const poly::Polynomial& phi, const Vec3& x);

}  // namespace gispec::specialmodes
