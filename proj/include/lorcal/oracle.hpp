#pragma once

// Brute-force reference implementations used by the test suites. Nothing in here
// shares code with the closed forms in expmap.

#include "lorcal/skew.hpp"
#include "lorcal/types.hpp"

#include <Eigen/Dense>

namespace lorcal::oracle {

struct OracleConfig {
  int series_terms = 24;
  double scaling_threshold = 0.5;
  double fd_step = 1e-5;
  double rank_tol = 1e-8;
};

/// Scaling and squaring around a truncated Taylor series.
Mat4C series_exp(const Mat4C& m, const OracleConfig& cfg = {});
Mat4 series_exp(const Mat4& m, const OracleConfig& cfg = {});

/// Central difference of series_exp(F + tG) with one Richardson step.
Mat4 fd_derivative(const SkewOp& f, const SkewOp& g, const OracleConfig& cfg = {});

int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol);

struct EigenResult {
  Eigen::Vector4cd values;
  Mat4C vectors;  // columns
};

/// Throws NoConvergence.
EigenResult eigen(const Mat4C& m);

/// Principal matrix logarithm. Throws BranchCut for spectrum on the closed
/// negative real axis.
Mat4C dense_log(const Mat4C& m);

}  // namespace lorcal::oracle
