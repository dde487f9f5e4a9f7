#include "gispec/sampling.hpp"

#include <cmath>

namespace gispec {

namespace {

// Orthonormal frame (e1, e2, e3) with e3 = axis (or z when axis vanishes).
void axis_frame(const Vec3& axis, Vec3& e1, Vec3& e2, Vec3& e3) {
  e3 = axis.norm() > 0.0 ? Vec3(axis.normalized()) : Vec3(0.0, 0.0, 1.0);
  const Vec3 seed = std::abs(e3.z()) < 0.9 ? Vec3(0.0, 0.0, 1.0) : Vec3(1.0, 0.0, 0.0);
  e1 = (seed - seed.dot(e3) * e3).normalized();
  e2 = e3.cross(e1);
}

// Smallest power of two >= v.
int pow2_at_least(double v) {
  int p = 1;
  while (p < v) p *= 2;
  return p;
}

// Latitude/longitude sphere grid: n_lat + 1 inclusive latitudes in cos(theta)
// (so both poles and, for even n_lat, the equator appear exactly), n_lon
// longitudes. Doubling either parameter yields a superset.
void append_sphere_shell(std::vector<Vec3>& out, double radius, int n_lat, int n_lon,
                         const Vec3& e1, const Vec3& e2, const Vec3& e3) {
  for (int j = 0; j <= n_lat; ++j) {
    const double z = -1.0 + 2.0 * static_cast<double>(j) / n_lat;
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    if (s == 0.0) {
      out.push_back(radius * z * e3);
      continue;
    }
    for (int l = 0; l < n_lon; ++l) {
      const double phi = 2.0 * M_PI * static_cast<double>(l) / n_lon;
      out.push_back(radius * (s * (std::cos(phi) * e1 + std::sin(phi) * e2) + z * e3));
    }
  }
}

void grid_shape(int target_count, int& n_lat, int& n_lon) {
  // Roughly 2x more longitudes than latitude bands, both powers of two so
  // that doubling the target count nests the grids.
  n_lat = pow2_at_least(std::sqrt(std::max(1.0, target_count / 2.0)));
  n_lon = 2 * n_lat;
  while (n_lat * n_lon < target_count) n_lon *= 2;
}

}  // namespace

std::vector<Vec3> sphere_product_grid(int target_count, const Vec3& axis) {
  Vec3 e1, e2, e3;
  axis_frame(axis, e1, e2, e3);
  int n_lat = 0, n_lon = 0;
  grid_shape(std::max(1, target_count), n_lat, n_lon);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n_lat + 1) * n_lon);
  append_sphere_shell(out, 1.0, n_lat, n_lon, e1, e2, e3);
  return out;
}

std::vector<Vec3> ball_product_grid(int target_count, const Vec3& axis) {
  Vec3 e1, e2, e3;
  axis_frame(axis, e1, e2, e3);
  const int n = std::max(1, target_count);
  const int n_r = pow2_at_least(std::cbrt(static_cast<double>(n) / 8.0));
  int n_lat = 0, n_lon = 0;
  grid_shape((n + n_r - 1) / n_r, n_lat, n_lon);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n_r) * (n_lat + 1) * n_lon);
  for (int k = 0; k < n_r; ++k) {
    // Shell radii (k+1)/n_r include r = 1 and nest under doubling of n_r.
    const double r = static_cast<double>(k + 1) / n_r;
    append_sphere_shell(out, r, n_lat, n_lon, e1, e2, e3);
  }
  return out;
}

std::vector<Vec3> fibonacci_sphere(int count) {
  std::vector<Vec3> out;
  const int n = std::max(1, count);
  out.reserve(n);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * M_PI * std::fmod(i / golden, 1.0);
    out.emplace_back(s * std::cos(phi), s * std::sin(phi), z);
  }
  return out;
}

}  // namespace gispec
