#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gispec/types.hpp"

namespace gispec::model {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Radial scalar profile: constant, polynomial in r, or a linearly
/// interpolated table. Tables extrapolate linearly past the last knot so
/// finite-difference probes just outside the domain stay defined.
struct ProfileSpec {
  enum class Kind { kConstant, kPolynomialR, kTableR };

  Kind kind = Kind::kConstant;
  double value = 0.0;
  std::vector<double> coeffs;    // polynomial_r, ascending powers of r
  std::vector<double> r_grid;    // table_r knots, strictly increasing
  std::vector<double> v_grid;

  static ProfileSpec constant(double v) {
    ProfileSpec p;
    p.kind = Kind::kConstant;
    p.value = v;
    return p;
  }
  static ProfileSpec polynomial(std::vector<double> c) {
    ProfileSpec p;
    p.kind = Kind::kPolynomialR;
    p.coeffs = std::move(c);
    return p;
  }
  static ProfileSpec table(std::vector<double> r, std::vector<double> v) {
    ProfileSpec p;
    p.kind = Kind::kTableR;
    p.r_grid = std::move(r);
    p.v_grid = std::move(v);
    return p;
  }

  double eval(double r) const;
  /// d/dr; exact for constant and polynomial kinds, segment slope for tables.
  double deriv(double r) const;
  bool is_polynomial() const { return kind != Kind::kTableR; }
};

struct Domain {
  bool ball = true;
  Vec3 semi_axes{1.0, 1.0, 1.0};

  double max_radius() const { return ball ? 1.0 : semi_axes.maxCoeff(); }
  /// Level function f with f < 0 inside, f = 0 on the boundary.
  double level(const Vec3& x) const;
  Vec3 level_gradient(const Vec3& x) const;
  bool contains(const Vec3& x, double tol = 1e-9) const;
  /// Approximate signed distance to the boundary, |f| / |grad f|.
  double boundary_distance(const Vec3& x) const;
};

struct Gravity {
  enum class Mode { kRadial, kConstant };
  Mode mode = Mode::kRadial;
  ProfileSpec profile;  // |g|(r) for radial mode; field is -|g|(r) x_hat
  Vec3 vector{0.0, 0.0, 0.0};
};

/// Background state of the planet: the single source of physical truth for
/// every downstream module.
struct PlanetModel {
  Vec3 omega{0.0, 0.0, 0.0};
  Domain domain;
  ProfileSpec rho0 = ProfileSpec::constant(1.0);
  ProfileSpec csq = ProfileSpec::constant(1.0);
  ProfileSpec nsq = ProfileSpec::constant(0.0);
  Gravity gravity;
  double gravity_const = 0.0;  // schema placeholder, no numerical role
};

struct BackgroundSample {
  Vec3 x;
  double rho0 = 0.0;
  double csq = 0.0;
  Vec3 g{0.0, 0.0, 0.0};
  Vec3 ghat{0.0, 0.0, 0.0};
  bool g_defined = false;  // |g| > 0, so ghat is meaningful
  double nsq = 0.0;
  Vec3 stilde{0.0, 0.0, 0.0};
};

struct ValidationReport {
  double max_interior_misalignment = 0.0;  // radians, (g, grad rho0)
  double max_boundary_misalignment = 0.0;  // radians, (g, n)
  double min_neg_g_dot_n = 0.0;            // min over boundary of -g . n_outward
  bool interior_pass = false;
  bool boundary_pass = false;
  int interior_samples = 0;
  int boundary_samples = 0;
  bool pass() const { return interior_pass && boundary_pass; }
};

/// Parse and validate a model from its JSON text. Schema violations are
/// reported with the offending field path; c^2 must be positive on a
/// validation grid covering the domain.
PlanetModel load_model(const std::string& json_text);
PlanetModel load_model_file(const std::string& path);
std::string model_to_json(const PlanetModel& m);

BackgroundSample eval_background(const PlanetModel& m, const Vec3& x);

/// Same fields without the domain-membership check; used by finite-difference
/// probes that step marginally outside the closed domain.
BackgroundSample eval_background_unchecked(const PlanetModel& m, const Vec3& x);

ValidationReport validate_hydrostatic(const PlanetModel& m, int samples);

/// Inward unit normal at a boundary point (within 1e-8 of the boundary).
Vec3 boundary_normal(const PlanetModel& m, const Vec3& x);

}  // namespace gispec::model
