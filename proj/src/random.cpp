#include "lorcal/random.hpp"

#include <cmath>

namespace lorcal {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vec3 Rng::unit3() {
  Vec3 v;
  do {
    v = {normal(), normal(), normal()};
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Eigen::Matrix3d Rng::frame() {
  const Vec3 k = unit3();
  Vec3 i = unit3();
  i -= i.dot(k) * k;
  while (i.norm() < 1e-3) {
    i = unit3();
    i -= i.dot(k) * k;
  }
  i.normalize();
  Eigen::Matrix3d m;
  m.col(0) = i;
  m.col(1) = k.cross(i);
  m.col(2) = k;
  return m;
}

SkewOp Rng::skew(double max_norm) {
  Vec6 x;
  for (int i = 0; i < 6; ++i) x(i) = normal();
  while (x.norm() < 1e-9)
    for (int i = 0; i < 6; ++i) x(i) = normal();
  const double radius = max_norm * std::pow(uniform(0.0, 1.0), 1.0 / 6.0);
  return SkewOp::from_coords(radius * x.normalized());
}

}  // namespace lorcal
