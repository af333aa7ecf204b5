#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numbers>

namespace lorcal {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec3C = Eigen::Vector3cd;
using Vec4 = Eigen::Vector4d;
using Vec4C = Eigen::Vector4cd;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3C = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4d;
using Mat4C = Eigen::Matrix4cd;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Minkowski metric diag(-1, 1, 1, 1).
inline Mat4 eta() {
  Mat4 m = Mat4::Identity();
  m(0, 0) = -1.0;
  return m;
}

/// Largest absolute entry; the residual norm used throughout the verification code.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// Bilinear (unconjugated) dot product on C^3.
inline cplx dot(const Vec3C& a, const Vec3C& b) { return (a.array() * b.array()).sum(); }

inline Vec3C cross(const Vec3C& a, const Vec3C& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

}  // namespace lorcal
