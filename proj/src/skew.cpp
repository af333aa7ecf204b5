#include "lorcal/skew.hpp"

#include "lorcal/error.hpp"

#include <cmath>

namespace lorcal {

namespace {

// The block (xV) with (xV) w = w x V.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> right_cross(const Eigen::Matrix<Scalar, 3, 1>& v) {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << Scalar(0), v(2), -v(1),
       -v(2), Scalar(0), v(0),
       v(1), -v(0), Scalar(0);
  return m;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> block_form(const Eigen::Matrix<Scalar, 3, 1>& e,
                                       const Eigen::Matrix<Scalar, 3, 3>& spatial) {
  Eigen::Matrix<Scalar, 4, 4> m;
  m(0, 0) = Scalar(0);
  m.template block<1, 3>(0, 1) = e.transpose();
  m.template block<3, 1>(1, 0) = e;
  m.template block<3, 3>(1, 1) = spatial;
  return m;
}

void require_same_sector(const ChiralOp& x, const ChiralOp& y) {
  if (x.chirality != y.chirality) {
    throw Error(ErrorKind::MixedChirality, "operands lie in opposite chiral sectors");
  }
}

SkewOp basis_op(int j) {
  Vec6 x = Vec6::Zero();
  x(j) = 1.0;
  return SkewOp::from_coords(x);
}

}  // namespace

Mat4 SkewOp::matrix() const { return block_form<double>(E, right_cross<double>(B)); }

Vec6 SkewOp::coords() const {
  Vec6 x;
  x << E, B;
  return x;
}

SkewOp SkewOp::from_coords(const Vec6& x) { return {x.head<3>(), x.tail<3>()}; }

SkewOp SkewOp::from_matrix(const Mat4& m) {
  const Mat4 metric = eta();
  const Mat4 k = 0.5 * (m - metric * m.transpose() * metric);
  SkewOp f;
  f.E = k.block<3, 1>(1, 0);
  f.B = Vec3(k(2, 3), k(3, 1), k(1, 2));
  return f;
}

Mat4C ComplexSkewOp::matrix() const { return block_form<cplx>(E, right_cross<cplx>(B)); }

Mat4C ChiralOp::matrix() const {
  const cplx s = chirality == Chirality::C ? -kI : kI;
  return block_form<cplx>(A, s * right_cross<cplx>(A));
}

ChiralOp ChiralOp::from_matrix(const Mat4C& m, Chirality chirality) {
  return {m.block<3, 1>(1, 0), chirality};
}

ChiralOp operator+(const ChiralOp& a, const ChiralOp& b) {
  require_same_sector(a, b);
  return {a.A + b.A, a.chirality};
}

ChiralOp operator-(const ChiralOp& a, const ChiralOp& b) {
  require_same_sector(a, b);
  return {a.A - b.A, a.chirality};
}

SkewOp star(const SkewOp& f) { return {-f.B, f.E}; }
ComplexSkewOp star(const ComplexSkewOp& f) { return {-f.B, f.E}; }

ChiralOp c_map(const SkewOp& f) { return {f.E.cast<cplx>() + kI * f.B.cast<cplx>(), Chirality::C}; }
ChiralOp cbar_map(const SkewOp& f) {
  return {f.E.cast<cplx>() - kI * f.B.cast<cplx>(), Chirality::CBar};
}

ComplexSkewOp c_map(const ComplexSkewOp& f) {
  const ComplexSkewOp s = star(f);
  return {f.E - kI * s.E, f.B - kI * s.B};
}

ComplexSkewOp cbar_map(const ComplexSkewOp& f) {
  const ComplexSkewOp s = star(f);
  return {f.E + kI * s.E, f.B + kI * s.B};
}

ComplexSkewOp to_complex(const ChiralOp& x) {
  const cplx s = x.chirality == Chirality::C ? -kI : kI;
  return {x.A, s * x.A};
}

SkewOp real_preimage(const ChiralOp& x) {
  const double sign = x.chirality == Chirality::C ? 1.0 : -1.0;
  return {x.A.real(), sign * x.A.imag()};
}

ChiralOp conjugate(const ChiralOp& x) {
  return {x.A.conjugate(), x.chirality == Chirality::C ? Chirality::CBar : Chirality::C};
}

cplx canonical_root(cplx z) {
  cplx r = std::sqrt(z);
  if (std::abs(r.real()) <= 1e-13 * std::abs(r) && r.imag() < 0.0) r = -r;
  return r;
}

Eigenvalue lambda(const ChiralOp& x) {
  const cplx z = dot(x.A, x.A);
  return {canonical_root(z), z};
}

cplx inner_chiral(const ChiralOp& x, const ChiralOp& y) {
  require_same_sector(x, y);
  return dot(x.A, y.A);
}

bool is_null(const ChiralOp& x) {
  return std::abs(dot(x.A, x.A)) <= 1e-9 * (1.0 + x.A.squaredNorm());
}

OpClass classify(const ChiralOp& x) {
  if (x.A.isZero(0.0)) return OpClass::Zero;
  return is_null(x) ? OpClass::Null : OpClass::Generic;
}

OpClass classify(const SkewOp& f) { return classify(c_map(f)); }

SkewOp bracket(const SkewOp& f, const SkewOp& g) {
  // c[F, G] has vector i A_F x A_G.
  const ChiralOp x = c_map(f);
  const ChiralOp y = c_map(g);
  return real_preimage({kI * cross(x.A, y.A), Chirality::C});
}

ChiralOp bracket_chiral(const ChiralOp& x, const ChiralOp& y) {
  if (x.chirality != y.chirality) return {Vec3C::Zero(), x.chirality};
  const cplx s = x.chirality == Chirality::C ? 2.0 * kI : -2.0 * kI;
  return {s * cross(x.A, y.A), x.chirality};
}

Mat6 ad_matrix(const SkewOp& f) {
  Mat6 m;
  for (int j = 0; j < 6; ++j) m.col(j) = bracket(f, basis_op(j)).coords();
  return m;
}

Mat3C ad_chiral(const ChiralOp& x) {
  const cplx s = x.chirality == Chirality::C ? 2.0 * kI : -2.0 * kI;
  // A x v as a matrix acting on v.
  return s * (-right_cross<cplx>(x.A));
}

std::vector<NullDirection> null_eigenvectors(const SkewOp& f) {
  const ChiralOp x = c_map(f);
  const OpClass kind = classify(x);
  if (kind == OpClass::Zero) throw Error(ErrorKind::ZeroOperator, "F = 0 has no distinguished null directions");

  const Mat4C cf = x.matrix();
  const Mat4C cbf = cf.conjugate();
  const Mat4C id = Mat4C::Identity();
  std::vector<NullDirection> out;

  auto normalise = [](const Vec4C& v) {
    const Vec4C s = v / v(0);
    return Vec4(s.real());
  };

  if (kind == OpClass::Null) {
    Eigen::Matrix<cplx, 8, 4> stacked;
    stacked << cf, cbf;
    Eigen::JacobiSVD<Eigen::Matrix<cplx, 8, 4>> svd(stacked, Eigen::ComputeFullV);
    out.push_back({normalise(svd.matrixV().col(3)), cplx(0.0)});
    return out;
  }

  const cplx lam = lambda(x).value;
  for (const double sign : {1.0, -1.0}) {
    const cplx mu = sign * lam;
    const Mat4C p = 0.5 * (id + cf / mu);
    const Mat4C q = 0.5 * (id + cbf / std::conj(mu));
    const Mat4C r = p * q;
    Eigen::Index best = 0;
    r.colwise().norm().maxCoeff(&best);
    out.push_back({normalise(r.col(best)), mu});
  }
  return out;
}

}  // namespace lorcal
