#pragma once

// Even entire functions of lambda written in terms of z = lambda^2, so callers never
// pick a square-root branch. Below |lambda| = 1e-4 the truncated Taylor series is used.

#include "lorcal/types.hpp"

#include <cmath>

namespace lorcal::scalar {

inline constexpr double kSeriesRadiusSq = 1e-8;

/// cosh(lambda)
inline cplx cosh_sq(cplx z) {
  if (std::abs(z) < kSeriesRadiusSq) return 1.0 + z * (1.0 / 2 + z * (1.0 / 24 + z / 720.0));
  return std::cosh(std::sqrt(z));
}

/// sinh(lambda) / lambda
inline cplx sinhc_sq(cplx z) {
  if (std::abs(z) < kSeriesRadiusSq) return 1.0 + z * (1.0 / 6 + z * (1.0 / 120 + z / 5040.0));
  const cplx l = std::sqrt(z);
  return std::sinh(l) / l;
}

/// (lambda cosh(lambda) - sinh(lambda)) / lambda^3
/// The direct form cancels badly for small lambda, so the series covers |z| < 0.5.
inline cplx dexp_coeff_sq(cplx z) {
  if (std::abs(z) < 0.5) {
    // sum_{k>=1} 2k z^{k-1} / (2k+1)!
    cplx sum = 0.0;
    cplx zk = 1.0;
    double fact = 6.0;  // (2k+1)! at k = 1
    for (int k = 1; k <= 14; ++k) {
      sum += 2.0 * k * zk / fact;
      zk *= z;
      fact *= (2.0 * k + 2) * (2.0 * k + 3);
    }
    return sum;
  }
  const cplx l = std::sqrt(z);
  return (l * std::cosh(l) - std::sinh(l)) / (z * l);
}

/// (1 - e^{-x}) / x for a single eigenvalue x.
inline cplx one_minus_exp_neg_over(cplx x) {
  if (std::abs(x) < 0.1) {
    // sum_{k>=0} (-x)^k / (k+1)!
    cplx sum = 0.0;
    cplx term = 1.0;
    for (int k = 0; k < 14; ++k) {
      sum += term;
      term *= -x / (k + 2.0);
    }
    return sum;
  }
  return (1.0 - std::exp(-x)) / x;
}

}  // namespace lorcal::scalar
