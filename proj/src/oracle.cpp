#include "lorcal/oracle.hpp"

#include "lorcal/error.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace lorcal::oracle {

Mat4C series_exp(const Mat4C& m, const OracleConfig& cfg) {
  int squarings = 0;
  double norm = max_abs(m);
  while (norm > cfg.scaling_threshold) {
    norm *= 0.5;
    ++squarings;
  }
  const Mat4C a = m / std::ldexp(1.0, squarings);
  Mat4C term = Mat4C::Identity();
  Mat4C sum = Mat4C::Identity();
  for (int k = 1; k <= cfg.series_terms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Mat4 series_exp(const Mat4& m, const OracleConfig& cfg) {
  return series_exp(Mat4C(m.cast<cplx>()), cfg).real();
}

Mat4 fd_derivative(const SkewOp& f, const SkewOp& g, const OracleConfig& cfg) {
  auto central = [&](double h) {
    const Mat4 plus = series_exp((f + h * g).matrix(), cfg);
    const Mat4 minus = series_exp((f - h * g).matrix(), cfg);
    return Mat4((plus - minus) / (2.0 * h));
  };
  const double h = cfg.fd_step;
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

EigenResult eigen(const Mat4C& m) {
  Eigen::ComplexEigenSolver<Mat4C> es(m);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "eigen-decomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Mat4C dense_log(const Mat4C& m) {
  const EigenResult e = eigen(m);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const cplx mu = e.values(i);
    if (std::abs(mu) == 0.0 ||
        (mu.real() <= 0.0 && std::abs(mu.imag()) <= 1e-12 * std::abs(mu))) {
      throw Error(ErrorKind::BranchCut, "spectrum touches the closed negative real axis");
    }
  }
  return m.log();
}

}  // namespace lorcal::oracle
