#pragma once

#include <vector>

#include "gispec/types.hpp"

namespace gispec {

/// Deterministic product grid over the unit ball: radial shells times a
/// latitude/longitude grid whose polar axis is `axis`. The grid always
/// contains the poles, the equator ring and the r = 1 shell, and grids for a
/// doubled target count are supersets of the coarser ones.
std::vector<Vec3> ball_product_grid(int target_count, const Vec3& axis);

/// Same latitude/longitude construction restricted to the unit sphere.
std::vector<Vec3> sphere_product_grid(int target_count, const Vec3& axis);

/// Deterministic Fibonacci lattice on the unit sphere.
std::vector<Vec3> fibonacci_sphere(int count);

}  // namespace gispec
