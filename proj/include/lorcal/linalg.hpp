#pragma once

#include <Eigen/Dense>

namespace lorcal {

/// Number of singular values above rel_tol * sigma_max.
inline int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

}  // namespace lorcal
