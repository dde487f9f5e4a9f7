#pragma once

#include <cstdint>
#include <random>

#include "gispec/types.hpp"

namespace gispec {

/// Seeded generator with distributions built from raw bits, so streams are
/// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  Complex complex_in_box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

  Vec3 unit_vector() {
    Vec3 v;
    do {
      v = Vec3(normal(), normal(), normal());
    } while (v.norm() < 1e-8);
    return v.normalized();
  }

  Vec3 in_ball(double radius = 1.0) {
    const double r = radius * std::cbrt(uniform());
    return r * unit_vector();
  }

  /// Unit vector orthogonal to `axis` (axis need not be unit).
  Vec3 unit_perp(const Vec3& axis) {
    const Vec3 a = axis.normalized();
    Vec3 v;
    do {
      v = unit_vector();
      v -= v.dot(a) * a;
    } while (v.norm() < 1e-8);
    return v.normalized();
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gispec
