#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "gispec/model.hpp"
#include "gispec/rng.hpp"
#include "gispec/types.hpp"

namespace gispec::testing {

// --- canned models -----------------------------------------------------------

/// Neutrally buoyant rotating ball with radial gravity: the Poincare case.
inline model::PlanetModel poincare_model(const Vec3& omega = Vec3(0, 0, 1)) {
  model::PlanetModel m;
  m.omega = omega;
  m.rho0 = model::ProfileSpec::constant(1.0);
  m.csq = model::ProfileSpec::constant(1.0);
  m.nsq = model::ProfileSpec::constant(0.0);
  m.gravity.mode = model::Gravity::Mode::kRadial;
  m.gravity.profile = model::ProfileSpec::polynomial({0.0, 1.0});  // |g| = r
  return m;
}

/// Constant gravity direction (f-plane style), constant N^2.
inline model::PlanetModel constant_g_model(double nsq, const Vec3& ghat,
                                           const Vec3& omega = Vec3::Zero(), double gmag = 1.0) {
  model::PlanetModel m;
  m.omega = omega;
  m.rho0 = model::ProfileSpec::constant(1.0);
  m.csq = model::ProfileSpec::constant(1.0);
  m.nsq = model::ProfileSpec::constant(nsq);
  m.gravity.mode = model::Gravity::Mode::kConstant;
  m.gravity.vector = gmag * ghat.normalized();
  return m;
}

/// Radial gravity with constant N^2 (possibly nonzero).
inline model::PlanetModel radial_model(double nsq, const Vec3& omega = Vec3::Zero()) {
  model::PlanetModel m = poincare_model(omega);
  m.nsq = model::ProfileSpec::constant(nsq);
  return m;
}

// --- multiset matching -------------------------------------------------------

/// Greedy bipartite match: every value of `a` pairs with a distinct value of
/// `b` within tol (requires equal sizes). Returns the worst pair distance or
/// infinity on failure.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& va : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(va - b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (b.empty()) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, best);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return worst;
}

inline std::vector<Complex> to_vector(const Eigen::VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace gispec::testing
