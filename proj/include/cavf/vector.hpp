#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace cavf {

/// Fixed-size column vector, N = 2 or 3. Positions and velocities are in
/// meters / meters per second; field values are desired velocities (m/s).
template <int N>
using Vec = Eigen::Matrix<double, N, 1>;

/// N x N linear operator (rotation matrices, field jacobians).
template <int N>
using Mat = Eigen::Matrix<double, N, N>;

template <int N>
inline bool is_finite(const Vec<N>& v) {
  return v.allFinite();
}

/// Signed angle from `a` to `b` in (-pi, pi], counter-clockwise positive.
inline double signed_angle(const Vec<2>& a, const Vec<2>& b) {
  return std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
}

/// Unsigned angle between two nonzero vectors, in [0, pi].
template <int N>
inline double angle_between(const Vec<N>& a, const Vec<N>& b) {
  if constexpr (N == 2) {
    return std::abs(signed_angle(a, b));
  } else {
    return std::atan2(a.cross(b).norm(), a.dot(b));
  }
}

/// Plane rotation in the convention used by the avoidance field:
/// [[cos, sin], [-sin, cos]] (a positive angle turns vectors clockwise).
inline Mat<2> field_rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat<2> r;
  r << c, s, -s, c;
  return r;
}

/// Right-handed rotation by `angle` about the unit axis.
inline Mat<3> axis_angle_rotation(const Vec<3>& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

/// Deterministic unit vector perpendicular to `v` (first basis axis that is
/// not aligned with v, projected and normalized).
inline Vec<3> any_perpendicular(const Vec<3>& v) {
  for (int k = 0; k < 3; ++k) {
    Vec<3> e = Vec<3>::Unit(k);
    Vec<3> c = v.cross(e);
    const double n = c.norm();
    if (n > 1e-9 * v.norm()) return c / n;
  }
  return Vec<3>::UnitX();  // v == 0, caller guards
}

/// True if Q is orthonormal with determinant +1 within `tol`.
template <int N>
inline bool is_rotation(const Mat<N>& q, double tol = 1e-9) {
  if (!q.allFinite()) return false;
  const double ortho = (q.transpose() * q - Mat<N>::Identity()).template lpNorm<Eigen::Infinity>();
  return ortho <= tol && std::abs(q.determinant() - 1.0) <= tol;
}

}  // namespace cavf
