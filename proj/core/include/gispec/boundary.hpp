#pragma once

#include <optional>
#include <utility>

#include "gispec/linalg.hpp"
#include "gispec/model.hpp"
#include "gispec/types.hpp"

namespace gispec::boundary {

/// Orthonormal boundary frame {xihat, nperp, n} with n the inward unit
/// normal and nperp = xihat x n.
struct BoundaryFrame {
  Vec3 x;
  Vec3 n;
  Vec3 xihat;
  Vec3 nperp;
};

/// Frame at a boundary point; the tangential direction is the hint projected
/// onto the tangent plane.
BoundaryFrame make_frame(const model::PlanetModel& m, const Vec3& x, const Vec3& tangent_hint);

/// 16x16 principal symbol of the boundary system, stored without the i*rho0
/// prefactor, together with its closed-form inverse (scaled so that
/// forward * inverse = I) when the projected 3x3 symbol is invertible.
struct BigSymbol {
  BoundaryFrame frame;
  Vec3 xi;
  Complex lambda;
  Eigen::MatrixXcd forward;
  std::optional<Eigen::MatrixXcd> inverse;
};

struct OdeEigs {
  int plus_multiplicity = 0;
  int minus_multiplicity = 0;
  std::pair<Complex, Complex> alphas;
  bool generic = true;       // alphas separated from +-|xi| by 1e-6 |xi|
  bool clustering_ok = false;
  Eigen::VectorXcd raw;      // eigenvalues of the assembled ODE matrix
};

struct LopatinskiiReport {
  CMat3 vtilde_inv;
  Complex indicator;
  std::pair<Complex, Complex> alphas;
  bool interior_elliptic = false;
  bool boundary_elliptic = false;
};

/// V(lambda) = lambda^2 I + 2 lambda [Omega x] + N^2 ghat ghat^T.
CMat3 v_matrix(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined, Complex lambda);

/// Vtilde along a unit direction u: P_u_perp V P_u_perp + P_u.
CMat3 vtilde(const CMat3& v, const Vec3& unit_dir);

/// Closed-form inverse of Vtilde_n at a boundary point. Throws when the
/// denominator lambda^4 + lambda^2 (N^2 |P_n_perp ghat|^2 + 4 Omega_n^2)
/// degenerates (lambda in the pointwise non-elliptic set at xi = n).
CMat3 vtilde_inverse(const model::PlanetModel& m, const Vec3& x, Complex lambda);

/// Closed-form boundary indicator xihat^T Vtilde_n^-1 xihat.
Complex lopatinskii_indicator(const model::PlanetModel& m, const Vec3& x, const Vec3& xihat,
                              Complex lambda);

BigSymbol assemble_big_symbol(const model::PlanetModel& m, const BoundaryFrame& frame,
                              const Vec3& xi, Complex lambda);

/// Eigenvalues of the boundary-frozen ODE matrix
/// K = -sym(n/i)^-1 sym(xi_tilde) with xi_tilde = xi_norm * frame.xihat,
/// clustered against {+-|xi| x7, alpha+-} (or {+-|xi| x8} when degenerate).
OdeEigs ode_matrix_eigs(const model::PlanetModel& m, const BoundaryFrame& frame, Complex lambda,
                        double xi_norm = 1.0);

/// The per-point boundary failure interval i |P_n_perp ghat| *
/// [-sqrt(max(0,N^2)), sqrt(max(0,N^2))], returned as (lo, hi) on the
/// imaginary axis.
std::pair<double, double> boundary_failure_interval(const model::PlanetModel& m, const Vec3& x);

LopatinskiiReport lopatinskii_report(const model::PlanetModel& m, const Vec3& x,
                                     const Vec3& xihat, Complex lambda);

}  // namespace gispec::boundary
