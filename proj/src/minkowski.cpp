#include "lorcal/minkowski.hpp"

#include "lorcal/error.hpp"

#include <cmath>

namespace lorcal {

namespace {

constexpr double kNullTol = 1e-9;

double hermitian_norm_sq(const Vec4C& v) { return v.squaredNorm(); }

bool is_null_pair(cplx value, double scale) { return std::abs(value) <= kNullTol * (1.0 + scale); }

}  // namespace

Vec4C basis_vector(int i) {
  if (i < 0 || i > 3) throw Error(ErrorKind::InvalidInput, "basis index out of range");
  Vec4C v = Vec4C::Zero();
  v(i) = 1.0;
  return v;
}

cplx inner_c(const Vec4C& v, const Vec4C& w) {
  return -v(0) * w(0) + v(1) * w(1) + v(2) * w(2) + v(3) * w(3);
}

cplx inner_hermitian(const Vec4C& v, const Vec4C& w) { return inner_c(v, w.conjugate()); }

Observer::Observer(const Vec4& u) : u_(u) {
  const double norm = -u(0) * u(0) + u.tail<3>().squaredNorm();
  if (std::abs(norm + 1.0) > 1e-10 * (1.0 + u.squaredNorm()) || !(u(0) > 0.0)) {
    throw Error(ErrorKind::InvalidObserver, "observer must satisfy <u,u> = -1 with u_t > 0");
  }
}

Observer Observer::boosted(const Vec3& rapidity) {
  const double phi = rapidity.norm();
  Vec4 u(std::cosh(phi), 0.0, 0.0, 0.0);
  if (phi > 0.0) u.tail<3>() = std::sinh(phi) * rapidity / phi;
  return Observer(u);
}

Vec4C rest_cross(const Observer& u, const Vec4C& a, const Vec4C& b) {
  if ((u.vector() - Vec4(1.0, 0.0, 0.0, 0.0)).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::UnsupportedObserver, "rest_cross is only defined for u = e0");
  }
  const double tol = 1e-12;
  if (std::abs(a(0)) > tol * (1.0 + a.norm()) || std::abs(b(0)) > tol * (1.0 + b.norm())) {
    throw Error(ErrorKind::NotInRestSpace, "arguments must be orthogonal to the observer");
  }
  Vec4C out = Vec4C::Zero();
  out.tail<3>() = cross(Vec3C(a.tail<3>()), Vec3C(b.tail<3>()));
  return out;
}

NullPlaneType classify_null_plane(const Vec4C& s, const Vec4C& t) {
  Eigen::Matrix<cplx, 4, 2> span;
  span << s, t;
  Eigen::JacobiSVD<Eigen::Matrix<cplx, 4, 2>> svd(span);
  const auto sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(1) <= 1e-12 * sv(0)) {
    throw Error(ErrorKind::DegenerateSpan, "spanning vectors are linearly dependent");
  }

  const double ss = hermitian_norm_sq(s);
  const double tt = hermitian_norm_sq(t);
  if (!is_null_pair(inner_c(s, s), ss) || !is_null_pair(inner_c(t, t), tt) ||
      !is_null_pair(inner_c(s, t), std::sqrt(ss * tt))) {
    return NullPlaneType::NotTotallyNull;
  }

  // Bivector s (eta t)^T - t (eta s)^T read as an (E, B) operator.
  const Mat4C metric = eta().cast<cplx>();
  const Mat4C m = s * (metric * t).transpose() - t * (metric * s).transpose();
  const Vec3C e = m.block<3, 1>(1, 0);
  const Vec3C b(m(2, 3), m(3, 1), m(1, 2));
  const double self_dual_defect = (e - kI * b).norm();   // cbar part
  const double anti_self_dual_defect = (e + kI * b).norm();  // c part
  return self_dual_defect <= anti_self_dual_defect ? NullPlaneType::Alpha : NullPlaneType::Beta;
}

}  // namespace lorcal
