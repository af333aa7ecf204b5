#include "lorcal/expmap.hpp"

#include "lorcal/error.hpp"
#include "lorcal/linalg.hpp"
#include "lorcal/scalar_functions.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace lorcal {

namespace {

constexpr double kPi = std::numbers::pi;

SkewOp basis_op(int j) {
  Vec6 x = Vec6::Zero();
  x(j) = 1.0;
  return SkewOp::from_coords(x);
}

Mat4 lorentz_inverse(const Mat4& m) {
  const Mat4 g = eta();
  return g * m.transpose() * g;
}

Mat4 sqrt_denman_beavers(const Mat4& a) {
  Mat4 y = a;
  Mat4 z = Mat4::Identity();
  for (int it = 0; it < 100; ++it) {
    const Mat4 y_next = 0.5 * (y + z.inverse());
    const Mat4 z_next = 0.5 * (z + y.inverse());
    const double step = (y_next - y).norm();
    y = y_next;
    z = z_next;
    if (step <= 1e-15 * y.norm()) return y;
  }
  throw Error(ErrorKind::NoConvergence, "matrix square root did not converge");
}

// log of a matrix close to I through 2 atanh((X - I)(X + I)^{-1}).
Mat4 log_near_identity(const Mat4& x) {
  const Mat4 id = Mat4::Identity();
  const Mat4 z = (x - id) * (x + id).inverse();
  const Mat4 z2 = z * z;
  Mat4 term = z;
  Mat4 sum = Mat4::Zero();
  for (int j = 0; j < 40; ++j) {
    const Mat4 contrib = term / (2.0 * j + 1.0);
    sum += contrib;
    if (max_abs(contrib) <= 1e-18 * (1.0 + max_abs(sum))) break;
    term = term * z2;
  }
  return 2.0 * sum;
}

Eigen::Matrix<double, 16, 6> dexp_jacobian(const SkewOp& f) {
  Eigen::Matrix<double, 16, 6> j;
  for (int k = 0; k < 6; ++k) {
    const Mat4 d = dexp(f, basis_op(k), DexpRoute::ClosedForm).value;
    j.col(k) = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(d.data());
  }
  return j;
}

Mat4 dexp_helgason(const SkewOp& f, const SkewOp& g) {
  const Vec6 x = helgason_factor(f) * g.coords();
  return exp_real(f) * SkewOp::from_coords(x).matrix();
}

Mat4 dexp_closed_form(const SkewOp& f, const SkewOp& g) {
  const ChiralOp x = 0.5 * c_map(f);
  const ChiralOp y = 0.5 * c_map(g);
  const Mat4C p = exp_chiral(x);
  const Mat4C dp = dexp_chiral(x, y);
  return (dp * p.conjugate() + p * dp.conjugate()).real();
}

Mat4 dexp_finite_difference(const SkewOp& f, const SkewOp& g) {
  const double h = 1e-3 / (1.0 + g.norm());
  auto central = [&](double step) {
    return Mat4((exp_real(f + step * g) - exp_real(f - step * g)) / (2.0 * step));
  };
  const Mat4 coarse = central(h);
  const Mat4 fine = central(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

LorentzDefect lorentz_defect(const Mat4& m) {
  const Mat4 g = eta();
  LorentzDefect d;
  d.isometry = max_abs(m.transpose() * g * m - g);
  d.determinant = std::abs(m.determinant() - 1.0);
  d.orthochronous = m(0, 0) >= 1.0 - 1e-10;
  return d;
}

Mat4C exp_chiral(const ChiralOp& x) {
  const cplx z = dot(x.A, x.A);
  return scalar::cosh_sq(z) * Mat4C::Identity() + scalar::sinhc_sq(z) * x.matrix();
}

LorentzMat exp_real(const SkewOp& f) {
  const Mat4C half = exp_chiral(0.5 * c_map(f));
  return (half * half.conjugate()).real();
}

Mat4C t_operator(const SkewOp& f) {
  const Mat4C cf = c_map(f).matrix();
  return 0.5 * cf * cbar_map(f).matrix();
}

SkewOp log_lorentz(const LorentzMat& l) {
  const LorentzDefect defect = lorentz_defect(l);
  if (!l.allFinite() || defect.isometry > 1e-8 * (1.0 + l.squaredNorm())) {
    throw Error(ErrorKind::NotLorentz, "matrix does not preserve the Minkowski form");
  }
  if (l.determinant() < 0.0 || !defect.orthochronous) {
    throw Error(ErrorKind::NotOrthochronous, "matrix is not proper orthochronous");
  }

  // Eigenvalues of L are e^{+-lambda}, e^{+-conj lambda}; a negative real one puts
  // Im lambda on +-pi, where two logarithms tie.
  Eigen::EigenSolver<Mat4> es(l, false);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const cplx mu = es.eigenvalues()(i);
    if (mu.real() < 0.0 && kPi - std::abs(std::arg(mu)) <= 1e-6) {
      throw Error(ErrorKind::BranchAmbiguous, "rotation angle of pi: the logarithm is not unique");
    }
  }

  Mat4 x = l;
  int squarings = 0;
  while ((x - Mat4::Identity()).norm() > 0.25) {
    if (++squarings > 60) throw Error(ErrorKind::NoConvergence, "inverse scaling did not reach I");
    x = sqrt_denman_beavers(x);
  }
  const Mat4 k0 = std::ldexp(1.0, squarings) * log_near_identity(x);
  SkewOp f = SkewOp::from_matrix(k0);

  for (int it = 0; it < 4; ++it) {
    const Mat4 r = l - exp_real(f);
    if (max_abs(r) <= 1e-15 * (1.0 + max_abs(l))) break;
    const Eigen::Matrix<double, 16, 1> rv = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(r.data());
    const Vec6 delta = dexp_jacobian(f).colPivHouseholderQr().solve(rv);
    f = f + SkewOp::from_coords(delta);
  }
  return f;
}

Mat4C dexp_chiral(const ChiralOp& x, const ChiralOp& y) {
  const cplx ip = inner_chiral(x, y);
  const cplx z = dot(x.A, x.A);
  const cplx s = scalar::sinhc_sq(z);
  return ip * (s * Mat4C::Identity() + scalar::dexp_coeff_sq(z) * x.matrix()) + s * y.matrix();
}

Mat6 helgason_factor(const SkewOp& f) {
  const Mat6 ad = ad_matrix(f);
  Eigen::EigenSolver<Mat6> es(ad);
  if (es.info() == Eigen::Success) {
    const Eigen::Matrix<cplx, 6, 6> v = es.eigenvectors();
    Eigen::JacobiSVD<Eigen::Matrix<cplx, 6, 6>> svd(v);
    const auto sv = svd.singularValues();
    if (sv(5) > 0.0 && sv(0) / sv(5) <= 1e8) {
      Eigen::Matrix<cplx, 6, 1> g;
      for (int i = 0; i < 6; ++i) g(i) = scalar::one_minus_exp_neg_over(es.eigenvalues()(i));
      return (v * g.asDiagonal() * v.inverse()).real();
    }
  }
  // sum_k (-ad)^k / (k+1)!
  Mat6 sum = Mat6::Identity();
  Mat6 term = Mat6::Identity();
  for (int k = 1; k < 300; ++k) {
    term = (-ad * term) / (k + 1.0);
    sum += term;
    if (k >= 30 && max_abs(term) <= 1e-18 * max_abs(sum)) break;
  }
  return sum;
}

DexpResult dexp(const SkewOp& f, const SkewOp& g, DexpRoute route) {
  switch (route) {
    case DexpRoute::Helgason: return {dexp_helgason(f, g), route};
    case DexpRoute::ClosedForm: return {dexp_closed_form(f, g), route};
    case DexpRoute::FiniteDifference: return {dexp_finite_difference(f, g), route};
  }
  throw Error(ErrorKind::InvalidInput, "unknown derivative route");
}

Mat6 dexp_pullback(const SkewOp& f) {
  const Mat4 inv = exp_real(-f);
  Mat6 m;
  for (int j = 0; j < 6; ++j) {
    m.col(j) = SkewOp::from_matrix(inv * dexp(f, basis_op(j), DexpRoute::ClosedForm).value).coords();
  }
  return m;
}

SingularityReport singularity(const SkewOp& f) {
  if (f.coords().isZero(0.0)) throw Error(ErrorKind::ZeroOperator, "exp is regular at F = 0");
  const ChiralOp x = c_map(f);
  SingularityReport rep;
  rep.lambda = lambda(x).value;
  rep.n = static_cast<int>(std::lround(rep.lambda.imag() / kTwoPi));
  rep.is_singular = rep.n != 0 && std::abs(rep.lambda - cplx(0.0, kTwoPi * rep.n)) <=
                                      1e-8 * (1.0 + std::abs(rep.lambda));
  if (!rep.is_singular) rep.n = 0;

  // Solutions of A . v = 0 span a complex plane; its real and imaginary directions
  // give four real operators.
  const Vec3C& a = x.A;
  Eigen::Index k = 0;
  a.cwiseAbs().maxCoeff(&k);
  int slot = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    Vec3C v = Vec3C::Zero();
    v(j) = a(k);
    v(k) = -a(j);
    v.normalize();
    rep.kernel_basis[slot++] = {v.real(), v.imag()};
    rep.kernel_basis[slot++] = {-v.imag(), v.real()};
  }
  rep.complement_basis = {f, star(f)};
  rep.derivative_rank = numeric_rank(dexp_pullback(f), 1e-8);
  return rep;
}

LorentzMat compose_map(std::span<const SkewOp> fs) {
  if (fs.empty()) throw Error(ErrorKind::InvalidInput, "composition needs at least one factor");
  Mat4 r = Mat4::Identity();
  for (const SkewOp& f : fs) r = r * exp_real(f);
  return r;
}

Eigen::MatrixXd compose_jacobian(std::span<const SkewOp> fs) {
  const Mat4 r = compose_map(fs);
  const Mat4 r_inv = lorentz_inverse(r);
  const std::size_t n = fs.size();
  std::vector<Mat4> factors(n);
  for (std::size_t i = 0; i < n; ++i) factors[i] = exp_real(fs[i]);
  std::vector<Mat4> suffix(n + 1, Mat4::Identity());
  for (std::size_t i = n; i-- > 0;) suffix[i] = factors[i] * suffix[i + 1];

  Eigen::MatrixXd jac(6, 6 * static_cast<Eigen::Index>(n));
  Mat4 prefix = Mat4::Identity();
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < 6; ++j) {
      const Mat4 d = dexp(fs[i], basis_op(j), DexpRoute::ClosedForm).value;
      jac.col(6 * static_cast<Eigen::Index>(i) + j) =
          SkewOp::from_matrix(r_inv * prefix * d * suffix[i + 1]).coords();
    }
    prefix = prefix * factors[i];
  }
  return jac;
}

int compose_jacobian_rank(std::span<const SkewOp> fs, double rel_tol) {
  return numeric_rank(compose_jacobian(fs), rel_tol);
}

cplx lambda_path_derivative(const SkewOp& f, const SkewOp& g) {
  const ChiralOp x = c_map(f);
  if (classify(x) != OpClass::Generic) {
    throw Error(ErrorKind::NullBase, "lambda_cF vanishes; the derivative of lambda is undefined");
  }
  return inner_chiral(x, c_map(g)) / lambda(x).value;
}

cplx lambda_sq_path_derivative(const SkewOp& f, const SkewOp& g, double t) {
  const ChiralOp y = c_map(g);
  return 2.0 * inner_chiral(c_map(f), y) + 2.0 * t * lambda(y).squared;
}

}  // namespace lorcal
