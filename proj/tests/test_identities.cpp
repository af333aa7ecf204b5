#include "lorcal/error.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/identities.hpp"
#include "lorcal/linalg.hpp"
#include "lorcal/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace lorcal;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lorcal::Error thrown";
  return ErrorKind::InvalidInput;
}

ChiralOp cz(cplx s) { return {Vec3C(0.0, 0.0, s), Chirality::C}; }
ChiralOp cx(cplx s) { return {Vec3C(s, 0.0, 0.0), Chirality::C}; }

}  // namespace

TEST(Generators, NullAndGeneric) {
  for (int k = 0; k < 50; ++k) {
    const ChiralOp n = gen_null(sample_seed(1, k));
    EXPECT_EQ(classify(n), OpClass::Null);
    EXPECT_EQ(gen_null(sample_seed(1, k), Chirality::CBar).chirality, Chirality::CBar);
    EXPECT_EQ(classify(gen_generic(sample_seed(2, k))), OpClass::Generic);
  }
}

TEST(Generators, SharedPairsReallyShare) {
  for (Chirality ch : {Chirality::C, Chirality::CBar})
    for (int k = 0; k < 50; ++k) {
      for (const SharedPair& p : {gen_shared_pair(sample_seed(3, k), ch), gen_shared_generic_pair(sample_seed(4, k), ch)}) {
        const Vec4C s = p.s.cast<cplx>();
        EXPECT_NEAR(p.s(0), 1.0, 1e-15);
        EXPECT_LE(std::abs(p.s.tail<3>().squaredNorm() - 1.0), 1e-12);
        EXPECT_LE((p.f.matrix() * s - p.lambda_f * s).norm(), 1e-11);
        EXPECT_LE((p.g.matrix() * s - p.lambda_g * s).norm(), 1e-11);
        EXPECT_EQ(p.f.chirality, ch);
      }
      EXPECT_EQ(classify(gen_shared_pair(sample_seed(3, k), ch).g), OpClass::Null);
    }
}

TEST(Generators, OpposedNullPair) {
  for (int k = 0; k < 50; ++k) {
    const OpposedNullPair p = gen_opposed_null_pair(sample_seed(5, k));
    const Vec4C sp = p.s_plus.cast<cplx>(), sm = p.s_minus.cast<cplx>();
    EXPECT_LE((p.f.matrix() * sp - p.lambda_f * sp).norm(), 1e-11);
    EXPECT_LE((p.f.matrix() * sm + p.lambda_f * sm).norm(), 1e-11);
    EXPECT_LE((p.n.matrix() * sp).norm(), 1e-11);
    EXPECT_LE((p.n_dag.matrix() * sm).norm(), 1e-11);
    EXPECT_GT(std::abs(inner_chiral(p.n, p.n_dag)), 1e-6);
  }
}

TEST(Product, ExamplesAndMixedChirality) {
  // cE_x cE_y = <.,.> I + [cE_x, cE_y]/2 = i cE_z.
  const ChiralOp x = cx(1.0), y{Vec3C(0.0, 1.0, 0.0), Chirality::C};
  const IdentityCheck c = check_product(x, y);
  EXPECT_LE(c.residual, 1e-15);
  EXPECT_LE(max_abs(Mat4C(c.lhs - kI * cz(1.0).matrix())), 1e-15);
  const ChiralOp xb{x.A, Chirality::CBar};
  EXPECT_EQ(kind_of([&] { check_product(x, xb); }), ErrorKind::MixedChirality);
  EXPECT_EQ(kind_of([&] { check_sandwich(x, xb); }), ErrorKind::MixedChirality);
  EXPECT_EQ(kind_of([&] { compose_exponentials(x, xb); }), ErrorKind::MixedChirality);
}

TEST(Product, AssociativityAndSandwich) {
  for (int k = 0; k < 100; ++k) {
    const Chirality ch = k % 2 ? Chirality::CBar : Chirality::C;
    const ChiralOp f = gen_generic(sample_seed(6, k), ch), g = gen_generic(sample_seed(7, k), ch),
                   h = gen_generic(sample_seed(8, k), ch);
    EXPECT_LE(max_abs(Mat4C((f.matrix() * g.matrix()) * h.matrix() - f.matrix() * (g.matrix() * h.matrix()))), 1e-12);
    EXPECT_LE(check_product(f, g).residual, 1e-12);
    EXPECT_LE(check_sandwich(f, g).residual, 1e-11);
  }
}

TEST(ExpComposition, CommutingRotationsAdd) {
  const ExpComposition r = compose_exponentials(cz(0.3 * kI), cz(0.4 * kI));
  EXPECT_LE(r.residual, 1e-14);
  EXPECT_LE((r.D.A - Vec3C(0.0, 0.0, 0.7 * kI)).norm(), 1e-14);
}

TEST(ExpComposition, RandomPairs) {
  for (int k = 0; k < 200; ++k) {
    const Chirality ch = k % 2 ? Chirality::CBar : Chirality::C;
    const ChiralOp f = gen_generic(sample_seed(9, k), ch), g = gen_generic(sample_seed(10, k), ch);
    const ExpComposition r = compose_exponentials(f, g);
    EXPECT_LE(r.residual, 1e-9);
    EXPECT_LE(std::abs(r.cosh_lambda_D - std::cosh(lambda(r.D).value)), 1e-9);
  }
}

TEST(ExpComposition, Unresolvable) {
  // Two quarter-period factors multiply to -I, where sinh(lambda_D) = 0.
  EXPECT_EQ(kind_of([] { compose_exponentials(cz(0.5 * kPi * kI), cz(0.5 * kPi * kI)); }), ErrorKind::Unresolvable);
  // A product equal to I is resolvable: D = 0.
  EXPECT_LE(compose_exponentials(cz(kPi * kI), cz(kPi * kI)).D.A.norm(), 1e-12);
}

TEST(ExpCommutator, RandomPairs) {
  for (int k = 0; k < 100; ++k) {
    const ChiralOp f = gen_generic(sample_seed(11, k)), g = gen_generic(sample_seed(12, k));
    EXPECT_LE(check_exp_commutator(f, g).residual, 1e-10);
  }
}

TEST(ExpEquality, DifferentButEqualExponentials) {
  for (int n : {1, 2}) {
    const ChiralOp g = cz(0.4 * kI);
    const ChiralOp f = cz((0.4 + 2.0 * kPi * n) * kI);
    const ExpEquality e = classify_exp_equality(f, g);
    EXPECT_TRUE(e.equal);
    EXPECT_EQ(std::abs(e.n), n);
    EXPECT_LE(e.rotation_residual, 1e-12);
    EXPECT_LE(e.commutator_residual, 1e-12);
    EXPECT_LE((f.A - g.A - (2.0 * kPi * e.n) * e.b_hat.A).norm(), 1e-12);
  }
  for (int k = 0; k < 50; ++k) {
    const ChiralOp g = gen_generic(sample_seed(13, k));
    const cplx l = lambda(g).value;
    const ChiralOp f = ((l + 2.0 * kPi * kI) / l) * g;
    const ExpEquality e = classify_exp_equality(f, g);
    EXPECT_TRUE(e.equal) << k;
    EXPECT_LE(e.exp_residual, 1e-9);
  }
}

TEST(ExpEquality, UnequalAndNullAndExcluded) {
  EXPECT_FALSE(classify_exp_equality(cz(0.4 * kI), cz(0.5 * kI)).equal);
  const ChiralOp n = gen_null(7);
  const ExpEquality e = classify_exp_equality(n, n);
  EXPECT_TRUE(e.equal);
  EXPECT_TRUE(e.both_null);
  EXPECT_EQ(e.n, 0);
  EXPECT_EQ(kind_of([] { classify_exp_equality(cz(2.0 * kPi * kI), cz(4.0 * kPi * kI)); }), ErrorKind::ExcludedCase);
  EXPECT_EQ(kind_of([] { classify_exp_equality(cz(kPi * kI), cz(3.0 * kPi * kI)); }), ErrorKind::ExcludedCase);
  // In the real form a half turn is admissible: its exponential is not I.
  const SkewOp f{Vec3::Zero(), kPi * Vec3::UnitZ()}, g{Vec3::Zero(), -kPi * Vec3::UnitZ()};
  EXPECT_TRUE(classify_exp_equality(f, g).equal);
  const SkewOp full{Vec3::Zero(), 2.0 * kPi * Vec3::UnitZ()};
  EXPECT_EQ(kind_of([&] { classify_exp_equality(full, SkewOp{}); }), ErrorKind::ExcludedCase);
}

TEST(CommutatorEigenvalue, Examples) {
  const ChiralOp x = cx(1.0), y{Vec3C(0.0, 1.0, 0.0), Chirality::C};
  EXPECT_LE(check_commutator_eigenvalue(x, y).residual, 1e-15);
  // [cE_x, cE_y] = 2i cE_z so lambda^2 = -4.
  EXPECT_LE(std::abs(check_commutator_eigenvalue(x, y).lhs + 4.0), 1e-14);
  Rng rng(14);
  for (int k = 0; k < 100; ++k) EXPECT_LE(check_commutator_eigenvalue(rng.skew(), rng.skew()).residual, 1e-10);
}

TEST(NullProduct, OrthogonalAndNot) {
  const ChiralOp a{Vec3C(1.0, kI, 0.0), Chirality::C};
  const ChiralOp b{Vec3C(1.0, -kI, 0.0), Chirality::C};
  EXPECT_LE(check_null_product(a, a).residual, 1e-14);
  EXPECT_LE(check_null_product(a, b).residual, 1e-13);
  const UnitBoostCheck u = null_product_unit_boost(a, b);
  EXPECT_LE(u.lambda_sq_residual, 1e-13);
  EXPECT_LE(u.orthogonality, 1e-13);
  EXPECT_EQ(kind_of([&] { null_product_unit_boost(a, a); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { check_null_product(cx(1.0), cx(1.0)); }), ErrorKind::InvalidInput);
  for (int k = 0; k < 100; ++k) {
    const Chirality ch = k % 2 ? Chirality::CBar : Chirality::C;
    const ChiralOp p = gen_null(sample_seed(15, k), ch), q = gen_null(sample_seed(16, k), ch);
    EXPECT_LE(check_null_product(p, q).residual, 1e-10);
    EXPECT_LE(check_null_product_vector(p, q).residual, 1e-10);
  }
}

TEST(SharedIdentities, RandomSamples) {
  for (int k = 0; k < 100; ++k) {
    const Chirality ch = k % 2 ? Chirality::CBar : Chirality::C;
    const SharedPair p = gen_shared_pair(sample_seed(17, k), ch);
    const SharedPair q = gen_shared_generic_pair(sample_seed(18, k), ch);
    EXPECT_LE(check_shared_eigenvector_inner_product(q).residual, 1e-10);
    EXPECT_LE(check_shared_eigenvector_inner_product(p).residual, 1e-10);
    EXPECT_LE(check_null_anticommutation(p).residual, 1e-10);
    EXPECT_LE(check_shared_null_bracket(p).residual, 1e-10);
    EXPECT_LE(check_shared_null_product(p).residual, 1e-10);
    EXPECT_LE(check_conjugation_of_null(p).residual, 1e-9);
    EXPECT_LE(check_conjugation_by_null(p).residual, 1e-9);
    EXPECT_LE(check_opposed_null_bracket(gen_opposed_null_pair(sample_seed(19, k), ch)).residual, 1e-10);
  }
}

TEST(Conjugation, RandomPairs) {
  for (int k = 0; k < 100; ++k) {
    const ChiralOp f = gen_generic(sample_seed(20, k)), g = gen_generic(sample_seed(21, k));
    EXPECT_LE(check_conjugation(f, g).residual, 1e-9);
  }
}

TEST(RealExpClosedForm, AllKinds) {
  for (RealExpKind kind : {RealExpKind::Imaginary, RealExpKind::Real, RealExpKind::Null})
    for (int k = 0; k < 50; ++k) {
      const SkewOp f = gen_real_exp_case(sample_seed(22, k), kind);
      EXPECT_LE(check_real_exp_closed_form(f, kind).residual, 1e-10);
    }
  const SkewOp rot{Vec3::Zero(), 0.7 * Vec3::UnitZ()};
  EXPECT_LE(check_t_rotation(rot, 0).residual, 1e-12);
  EXPECT_LE(check_t_rotation(rot, 1).residual, 1e-12);
  EXPECT_EQ(kind_of([] { check_t_rotation(SkewOp{Vec3::UnitX(), Vec3::Zero()}, 0); }), ErrorKind::InvalidInput);
}

TEST(TNormalisation, HalfForClosedFormsQuarterForNullSquare) {
  const TNormalisationReport r = t_normalisation_report(100, 23);
  EXPECT_EQ(r.closed_form_factor, "1/2");
  EXPECT_EQ(r.null_square_factor, "1/4");
  EXPECT_LE(r.half_real_residual, 1e-10);
  EXPECT_LE(r.half_imag_residual, 1e-10);
  EXPECT_GT(r.quarter_real_residual, 1e-3);
  EXPECT_LE(r.quarter_null_square, 1e-10);
  EXPECT_GT(r.half_null_square, 1e-3);
}

TEST(Suite, NamesTolerancesAndUnknownName) {
  const auto names = identity_names();
  EXPECT_GE(names.size(), 20u);
  for (const auto& n : names) {
    EXPECT_GE(identity_tolerance(n), 1e-12);
    EXPECT_LE(identity_tolerance(n), 1e-9);
  }
  EXPECT_EQ(kind_of([] { identity_residual("no_such_identity", 0); }), ErrorKind::InvalidInput);
}

TEST(Suite, PassesAndIsDeterministic) {
  const auto a = run_identity_suite(100, 42, Exec::Parallel);
  const auto b = run_identity_suite(100, 42, Exec::Serial);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].pass()) << a[i].name << " max " << a[i].result.max_residual;
    EXPECT_EQ(a[i].result.max_residual, b[i].result.max_residual) << a[i].name;
    EXPECT_EQ(a[i].result.worst_index, b[i].result.worst_index) << a[i].name;
  }
}
