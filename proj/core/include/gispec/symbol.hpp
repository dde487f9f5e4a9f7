#pragma once

#include <utility>
#include <vector>

#include "gispec/model.hpp"
#include "gispec/types.hpp"

namespace gispec::symbol {

/// Frozen-coefficient 3x3 principal symbol at (x, xi, lambda). The matrix
/// factors through the projector orthogonal to xi on both sides.
struct PointSymbol {
  Vec3 x;
  Vec3 xi;
  Complex lambda;
  CMat3 matrix;
};

/// Pointwise symbol spectrum: the at-most-three lambda values where the
/// projected symbol drops below rank two, plus the local (beta-, beta+) pair.
struct PointSpectrum {
  std::vector<Complex> values;
  double beta_minus = 0.0;
  double beta_plus = 0.0;
};

/// Id - xi xi^T / |xi|^2. Throws on zero xi.
Mat3 projector_perp(const Vec3& xi);

/// Raw-field forms; the model wrappers below evaluate the background first.
CMat3 symbol_matrix_fields(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined,
                           const Vec3& xi, Complex lambda);
PointSpectrum sigma_pt_fields(const Vec3& omega, double nsq, const Vec3& ghat, bool g_defined,
                              const Vec3& xi);
std::pair<double, double> beta_pm_fields(const Vec3& omega, double nsq, const Vec3& ghat,
                                         bool g_defined);
Complex scalar_poincare_symbol_fields(const Vec3& omega, double nsq, const Vec3& ghat,
                                      bool g_defined, const Vec3& xi, Complex lambda);

PointSymbol symbol_matrix(const model::PlanetModel& m, const Vec3& x, const Vec3& xi,
                          Complex lambda);
PointSpectrum sigma_pt(const model::PlanetModel& m, const Vec3& x, const Vec3& xi);
std::pair<double, double> beta_pm(const model::PlanetModel& m, const Vec3& x);
Complex scalar_poincare_symbol(const model::PlanetModel& m, const Vec3& x, const Vec3& xi,
                               Complex lambda);

/// Second-smallest over largest singular value of the projected symbol;
/// rank < 2 exactly when this ratio falls below the rank threshold. This is
/// the brute-force route used to cross-check the closed-form spectrum.
double rank_deficiency_ratio(const CMat3& symbol);

}  // namespace gispec::symbol
