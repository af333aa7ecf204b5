#include "lorcal/sweep.hpp"

#include "lorcal/random.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>

namespace lorcal {

namespace {

double guarded(const std::function<double(std::uint64_t)>& residual, std::uint64_t s) {
  try {
    const double r = residual(s);
    return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Larger residual wins; equal residuals go to the smaller index.
void merge(SweepResult& into, double r, std::int64_t i) {
  if (into.worst_index < 0 || r > into.max_residual || (r == into.max_residual && i < into.worst_index)) {
    into.max_residual = r;
    into.worst_index = i;
  }
}

}  // namespace

SweepResult sweep(std::int64_t n, std::uint64_t seed, double tol,
                  const std::function<double(std::uint64_t)>& residual, Exec exec) {
  SweepResult out;
  out.samples = n;
  if (n <= 0) return out;

  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) {
      const double r = guarded(residual, sample_seed(seed, static_cast<std::uint64_t>(i)));
      if (!(r <= tol)) ++out.failures;
      merge(out, r, i);
    }
    return out;
  }

  std::int64_t failures = 0;
#pragma omp parallel
  {
    SweepResult local;
#pragma omp for schedule(dynamic, 8) reduction(+ : failures) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const double r = guarded(residual, sample_seed(seed, static_cast<std::uint64_t>(i)));
      if (!(r <= tol)) ++failures;
      merge(local, r, i);
    }
#pragma omp critical(lorcal_sweep_merge)
    {
      if (local.worst_index >= 0) merge(out, local.max_residual, local.worst_index);
    }
  }
  out.failures = failures;
  return out;
}

double tolerance_scale() {
  const char* env = std::getenv("LORCAL_TOL");
  if (env == nullptr || *env == '\0') return 1.0;
  try {
    std::size_t used = 0;
    const double v = std::stod(env, &used);
    if (used == std::string(env).size() && v > 0.0 && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  return 1.0;
}

}  // namespace lorcal
