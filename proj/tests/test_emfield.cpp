#include "lorcal/emfield.hpp"
#include "lorcal/error.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/linalg.hpp"
#include "lorcal/oracle.hpp"
#include "lorcal/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lorcal;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lorcal::Error thrown";
  return ErrorKind::InvalidInput;
}

ChargeState state(double q, double r, const Vec3& w, const Vec3& a) {
  ChargeState s;
  s.q = q;
  s.r = r;
  s.w = w;
  s.a = a;
  return s;
}

}  // namespace

TEST(FieldAt, AcceleratedExample) {
  const FieldDecomposition d = field_at(state(1.0, 1.0, Vec3::UnitZ(), Vec3::UnitX()));
  EXPECT_LE((d.F_a.E - Vec3(-1.0, 0.0, 1.0)).norm(), 1e-15);
  EXPECT_LE((d.F_a.B - Vec3(0.0, -1.0, 0.0)).norm(), 1e-15);
  EXPECT_LE((d.F_a - d.E_coul - d.N_a).norm(), 1e-15);
  EXPECT_EQ(classify(d.N_a), OpClass::Null);
  EXPECT_EQ(classify(d.E_coul), OpClass::Generic);
  // Against series-oracle exponentials.
  const Mat4 rhs = oracle::series_exp((-1.0 * d.N_a).matrix()) * d.E_coul.matrix() * oracle::series_exp(d.N_a.matrix());
  EXPECT_LE(max_abs(Mat4(d.F_a.matrix() - rhs)), 1e-9);
}

TEST(FieldAt, NoOrLongitudinalAcceleration) {
  for (const Vec3& a : {Vec3(0.0, 0.0, 0.0), Vec3(0.0, 0.0, 2.5)}) {
    const ChargeState s = state(0.7, 2.0, Vec3::UnitZ(), a);
    const FieldDecomposition d = field_at(s);
    EXPECT_EQ(d.a_perp, Vec3::Zero());
    EXPECT_LE(d.N_a.norm(), 0.0);
    EXPECT_LE((d.F_a - d.E_coul).norm(), 0.0);
    EXPECT_LE((d.F_a.E - (0.7 / 4.0) * Vec3::UnitZ()).norm(), 1e-16);
    const FieldConjugationCheck c = check_field_conjugation(s);
    EXPECT_LE(c.conjugation.residual, 1e-15);
  }
}

TEST(FieldAt, Errors) {
  EXPECT_EQ(kind_of([] { field_at(state(1.0, 0.0, Vec3::UnitZ(), Vec3::Zero())); }), ErrorKind::InvalidState);
  EXPECT_EQ(kind_of([] { field_at(state(1.0, -1.0, Vec3::UnitZ(), Vec3::Zero())); }), ErrorKind::InvalidState);
  EXPECT_EQ(kind_of([] { field_at(state(1.0, 1.0, Vec3(0.0, 0.0, 2.0), Vec3::Zero())); }), ErrorKind::InvalidState);
  EXPECT_EQ(kind_of([] { field_at(state(NAN, 1.0, Vec3::UnitZ(), Vec3::Zero())); }), ErrorKind::InvalidState);
  ChargeState s = state(1.0, 1.0, Vec3::UnitZ(), Vec3::Zero());
  s.u = Observer::boosted(Vec3(0.3, 0.0, 0.0));
  EXPECT_EQ(kind_of([&] { field_at(s); }), ErrorKind::UnsupportedObserver);
  EXPECT_EQ(kind_of([] { check_field_conjugation(state(1.0, 0.0, Vec3::UnitZ(), Vec3::Zero())); }),
            ErrorKind::InvalidState);
}

TEST(FieldConjugation, RandomStates) {
  for (int k = 0; k < 500; ++k) {
    const ChargeState s = random_charge_state(sample_seed(70, k));
    const FieldConjugationCheck c = check_field_conjugation(s);
    EXPECT_LE(c.conjugation.residual, 1e-9 * c.field_scale) << k;
    EXPECT_LE(c.chiral_half_step.residual, 1e-10) << k;
    EXPECT_LE(c.eigenvalue_residual, 1e-10) << k;
    EXPECT_LE(c.eigenvector_residual, 1e-12) << k;
  }
}

TEST(FieldConjugation, EigenvalueIsCoulombOnly) {
  const ChargeState s = state(-1.5, 0.5, Vec3(0.6, 0.0, 0.8), Vec3(1.0, 2.0, -0.5));
  const FieldConjugationCheck c = check_field_conjugation(s);
  EXPECT_LE(std::abs(c.shared_eigenvalue - cplx(-1.5 / 0.25)), 1e-12);
  EXPECT_LE(std::abs(c.lambda_sq - cplx(2.25 / 0.0625)), 1e-10);
}

TEST(FieldConjugation, BoostedObserverCovariance) {
  // Conjugating the whole configuration by a boost preserves the identity.
  Rng rng(71);
  for (int k = 0; k < 50; ++k) {
    const ChargeState s = random_charge_state(sample_seed(72, k));
    const FieldDecomposition d = field_at(s);
    const Mat4 l = exp_real(SkewOp{rng.uniform(0.0, 1.5) * rng.unit3(), Vec3::Zero()});
    const Mat4 linv = eta() * l.transpose() * eta();
    auto move = [&](const SkewOp& f) { return SkewOp::from_matrix(l * f.matrix() * linv); };
    const SkewOp fa = move(d.F_a), ec = move(d.E_coul), na = move(d.N_a);
    const Mat4 rhs = exp_real(-s.r * na) * ec.matrix() * exp_real(s.r * na);
    EXPECT_LE(max_abs(Mat4(fa.matrix() - rhs)), 1e-9 * (1.0 + fa.norm()));
    EXPECT_EQ(classify(na), classify(d.N_a));
    EXPECT_LE(std::abs(lambda(c_map(fa)).squared - lambda(c_map(d.F_a)).squared), 1e-9 * (1.0 + fa.norm() * fa.norm()));
    const Vec4C s_moved = l.cast<cplx>() * d.shared_eigenvector;
    EXPECT_LE((c_map(na).matrix() * s_moved).norm(), 1e-10 * (1.0 + na.norm()));
  }
}

TEST(SampleCone, CoulombRowsAndChargeFree) {
  const std::vector<double> radii{0.5, 1.0, 3.0};
  const auto dirs = sphere_directions(32);
  ASSERT_EQ(dirs.size(), 32u);
  for (const Vec3& w : dirs) EXPECT_NEAR(w.norm(), 1.0, 1e-14);
  const auto rows = sample_cone(2.0, Vec3::Zero(), radii, dirs);
  ASSERT_EQ(rows.size(), 96u);
  for (const ConeSample& s : rows) {
    EXPECT_LE((s.E - (2.0 / (s.r * s.r)) * s.w).norm(), 1e-14);
    EXPECT_EQ(s.B, Vec3::Zero());
    EXPECT_LE(std::abs(s.lambda_sq - cplx(4.0 / std::pow(s.r, 4))), 1e-12);
    EXPECT_EQ(s.cls, OpClass::Generic);
  }
  EXPECT_EQ(rows[0].r, 0.5);
  EXPECT_EQ(rows[32].r, 1.0);
  for (const ConeSample& s : sample_cone(0.0, Vec3(1.0, 2.0, 3.0), radii, dirs)) {
    EXPECT_EQ(s.E, Vec3::Zero());
    EXPECT_EQ(s.B, Vec3::Zero());
    EXPECT_EQ(s.cls, OpClass::Zero);
  }
  EXPECT_EQ(kind_of([&] { sample_cone(1.0, Vec3::Zero(), {1.0, 0.0}, dirs); }), ErrorKind::InvalidState);
}

TEST(SampleCone, RadiativeLimit) {
  const Vec3 a(1.0, -0.5, 2.0);
  const auto dirs = sphere_directions(64);
  const auto rows = sample_cone(1.3, a, {10.0, 100.0, 1000.0}, dirs);
  for (const ConeSample& s : rows) {
    // lambda^2 is a cancellation between |E|^2 and |B|^2, so the bound scales with the field.
    const double scale = (s.E.squaredNorm() + s.B.squaredNorm()) * std::pow(s.r, 4);
    EXPECT_LE(std::abs(s.lambda_sq * std::pow(s.r, 4) - cplx(1.69)), 1e-12 + 1e-14 * scale);
    const Vec3 a_perp = a - a.dot(s.w) * s.w;
    if (s.r >= 1000.0 && a_perp.norm() > 0.1) {
      EXPECT_LE((s.E + (1.3 / s.r) * a_perp).norm(), 2.0 / (s.r * s.r));
      EXPECT_NEAR(s.E.norm() / s.B.norm(), 1.0, 1e-2);
    }
  }
}

TEST(SampleCone, SerialMatchesParallel) {
  const auto dirs = sphere_directions(200);
  const auto p = sample_cone(0.9, Vec3(0.2, 0.3, -1.0), {0.3, 1.0, 7.0}, dirs, Exec::Parallel);
  const auto s = sample_cone(0.9, Vec3(0.2, 0.3, -1.0), {0.3, 1.0, 7.0}, dirs, Exec::Serial);
  ASSERT_EQ(p.size(), s.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(p[i].E, s[i].E);
    EXPECT_EQ(p[i].B, s[i].B);
    EXPECT_EQ(p[i].lambda_sq, s[i].lambda_sq);
  }
}
