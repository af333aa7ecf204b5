#pragma once

// Seeded samplers. Every sample in a sweep gets its own generator derived from
// (base seed, index), so results do not depend on scheduling.

#include "lorcal/skew.hpp"
#include "lorcal/types.hpp"

#include <cstdint>
#include <random>

namespace lorcal {

std::uint64_t splitmix64(std::uint64_t x);

inline std::uint64_t sample_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return normal_(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  cplx complex_normal() { return {normal(), normal()}; }

  Vec3 unit3();
  /// Orthonormal right-handed frame (i, j, k) as columns.
  Eigen::Matrix3d frame();
  /// Uniform in the ball |(E, B)| <= max_norm.
  SkewOp skew(double max_norm = 3.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace lorcal
