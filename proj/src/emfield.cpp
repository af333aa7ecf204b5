#include "lorcal/emfield.hpp"

#include "lorcal/error.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/random.hpp"

#include <cmath>
#include <numbers>

namespace lorcal {

namespace {

bool finite(const Vec3& v) { return v.allFinite(); }

}  // namespace

FieldDecomposition field_at(const ChargeState& s) {
  if (!std::isfinite(s.q) || !std::isfinite(s.r) || !finite(s.w) || !finite(s.a))
    throw Error(ErrorKind::InvalidState, "non-finite charge state");
  if (s.r <= 0.0) throw Error(ErrorKind::InvalidState, "r must be positive");
  if (std::abs(s.w.squaredNorm() - 1.0) > 1e-9) throw Error(ErrorKind::InvalidState, "w must be a unit vector");
  if ((s.u.vector() - Observer::rest().vector()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::UnsupportedObserver, "only the rest observer e0 is supported");

  FieldDecomposition out;
  out.a_perp = s.a - s.a.dot(s.w) * s.w;
  out.E_coul = SkewOp{(s.q / (s.r * s.r)) * s.w, Vec3::Zero()};
  out.N_a = SkewOp{-out.a_perp, out.a_perp.cross(s.w)};
  out.F_a = out.E_coul + (s.q / s.r) * out.N_a;
  out.shared_eigenvector << 1.0, s.w(0), s.w(1), s.w(2);
  return out;
}

FieldConjugationCheck check_field_conjugation(const ChargeState& s) {
  const FieldDecomposition d = field_at(s);
  FieldConjugationCheck out;

  const Mat4 rhs = exp_real(-s.r * d.N_a) * d.E_coul.matrix() * exp_real(s.r * d.N_a);
  out.conjugation = make_check("field_conjugation", d.F_a.matrix().cast<cplx>(), rhs.cast<cplx>());
  out.field_scale = 1.0 + d.F_a.norm();

  const ChiralOp ce = c_map(d.E_coul);
  const ChiralOp cn = c_map(d.N_a);
  const Mat4C half = exp_chiral(-0.5 * s.r * cn) * ce.matrix() * exp_chiral(0.5 * s.r * cn);
  out.chiral_half_step =
      make_check("field_chiral_half_step", half, Mat4C(ce.matrix() + (s.q / s.r) * cn.matrix()));

  const ChiralOp cf = c_map(d.F_a);
  const Vec4C& sv = d.shared_eigenvector;
  const Vec4C image = cf.matrix() * sv;
  out.shared_eigenvalue = image(0) / sv(0);
  out.lambda_sq = lambda(cf).squared;
  const double expected = s.q / (s.r * s.r);
  out.eigenvalue_residual =
      std::max(std::abs(out.shared_eigenvalue - expected), std::abs(out.lambda_sq - expected * expected));

  const Vec4C ew_image = c_map(SkewOp{s.w, Vec3::Zero()}).matrix() * sv;
  out.eigenvector_residual = std::max({std::abs(inner_chiral(ce, cn)), max_abs(Vec4C(cn.matrix() * sv)),
                                       max_abs(Vec4C(ew_image - sv)), max_abs(Vec4C(image - out.shared_eigenvalue * sv))});
  return out;
}

ChargeState random_charge_state(std::uint64_t seed) {
  Rng rng(seed);
  ChargeState s;
  s.q = rng.uniform(-2.0, 2.0);
  s.r = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
  s.w = rng.unit3();
  s.a = rng.uniform(0.0, 3.0) * rng.unit3();
  return s;
}

std::vector<Vec3> sphere_directions(int n) {
  std::vector<Vec3> out;
  if (n <= 0) return out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    out.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return out;
}

std::vector<ConeSample> sample_cone(double q, const Vec3& a, const std::vector<double>& r_grid,
                                    const std::vector<Vec3>& directions, Exec exec) {
  for (double r : r_grid)
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidState, "grid radii must be positive");
  if (!std::isfinite(q) || !finite(a)) throw Error(ErrorKind::InvalidState, "non-finite charge state");
  for (const Vec3& w : directions)
    if (!finite(w) || w.norm() < 1e-12) throw Error(ErrorKind::InvalidState, "directions must be nonzero");

  const std::int64_t nd = static_cast<std::int64_t>(directions.size());
  const std::int64_t total = static_cast<std::int64_t>(r_grid.size()) * nd;
  std::vector<ConeSample> rows(static_cast<std::size_t>(total));

  auto fill = [&](std::int64_t idx) {
    ChargeState s;
    s.q = q;
    s.r = r_grid[static_cast<std::size_t>(idx / nd)];
    s.w = directions[static_cast<std::size_t>(idx % nd)].normalized();
    s.a = a;
    const FieldDecomposition d = field_at(s);
    ConeSample& row = rows[static_cast<std::size_t>(idx)];
    row.r = s.r;
    row.w = s.w;
    row.E = d.F_a.E;
    row.B = d.F_a.B;
    row.lambda_sq = lambda(c_map(d.F_a)).squared;
    row.cls = classify(d.F_a);
  };

  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < total; ++i) fill(i);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) fill(i);
  }
  return rows;
}

}  // namespace lorcal
