#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gispec {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

/// Matrix of the map w -> a x w.
inline Mat3 cross_matrix(const Vec3& a) {
  Mat3 m;
  m << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
       -a.y(), a.x(), 0.0;
  return m;
}

/// Orthogonal projector onto span{u}^perp for a unit vector u.
inline Mat3 perp_projector_unit(const Vec3& u) {
  return Mat3::Identity() - u * u.transpose();
}

}  // namespace gispec
