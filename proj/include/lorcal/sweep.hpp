#pragma once

// Seeded verification sweeps with a serial reference loop and an OpenMP loop
// that must agree with it bit for bit.

#include <cstdint>
#include <functional>
#include <limits>

namespace lorcal {

enum class Exec { Serial, Parallel };

struct SweepResult {
  double max_residual = 0.0;
  std::int64_t worst_index = -1;
  std::int64_t samples = 0;
  std::int64_t failures = 0;  // residual > tol, non-finite, or thrown
};

/// Evaluates residual(sample_seed(seed, i)) for i in [0, n). Exceptions count as
/// infinite residuals. The worst index is the smallest index attaining the max.
SweepResult sweep(std::int64_t n, std::uint64_t seed, double tol,
                  const std::function<double(std::uint64_t)>& residual, Exec exec);

/// Multiplicative scale on verification tolerances read from LORCAL_TOL (default 1).
double tolerance_scale();

}  // namespace lorcal
