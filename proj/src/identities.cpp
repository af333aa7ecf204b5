#include "lorcal/identities.hpp"

#include "lorcal/error.hpp"
#include "lorcal/random.hpp"
#include "lorcal/scalar_functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace lorcal {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_sector(const ChiralOp& x, const ChiralOp& y) {
  if (x.chirality != y.chirality) throw Error(ErrorKind::MixedChirality, "operands lie in opposite chiral sectors");
}

Mat4 lorentz_inverse(const Mat4& l) { return eta() * l.transpose() * eta(); }

ChiralOp conjugate_by(const Mat4& l, const ChiralOp& x) {
  const Mat4C lc = l.cast<cplx>();
  const Mat4C linv = lorentz_inverse(l).cast<cplx>();
  return ChiralOp::from_matrix(lc * x.matrix() * linv, x.chirality);
}

Vec4 transport(const Mat4& l, const Vec4& s) {
  const Vec4 t = l * s;
  return t / t(0);
}

Mat4 random_lorentz(Rng& rng) { return exp_real(rng.skew(0.6)); }

cplx random_complex(Rng& rng, double lo, double hi) {
  return std::polar(rng.uniform(lo, hi), rng.uniform(-kPi, kPi));
}

// Operators are built in cS; the cbar sector is reached by complex conjugation,
// which conjugates eigenvalues and keeps the real null eigenvectors.
ChiralOp to_sector(const ChiralOp& x, Chirality chirality) {
  return chirality == Chirality::C ? x : conjugate(x);
}

cplx to_sector(cplx v, Chirality chirality) { return chirality == Chirality::C ? v : std::conj(v); }

// Sign of the cross term in (1/2)[X, Y] = s i A_X x A_Y.
double sector_sign(Chirality chirality) { return chirality == Chirality::C ? 1.0 : -1.0; }

Mat4C commutator(const Mat4C& a, const Mat4C& b) { return a * b - b * a; }

Chirality sample_chirality(std::uint64_t sample) { return (sample & 1U) ? Chirality::CBar : Chirality::C; }

}  // namespace

IdentityCheck make_check(std::string name, const Mat4C& lhs, const Mat4C& rhs) {
  return {std::move(name), lhs, rhs, max_abs(lhs - rhs)};
}

ScalarCheck make_check(std::string name, cplx lhs, cplx rhs) {
  return {std::move(name), lhs, rhs, std::abs(lhs - rhs)};
}

// --- generators -----------------------------------------------------------

ChiralOp gen_null(std::uint64_t seed, Chirality chirality) {
  Rng rng(seed);
  const Eigen::Matrix3d fr = rng.frame();
  const cplx e = random_complex(rng, 0.2, 2.0);
  const Vec3C a = e * (fr.col(0).cast<cplx>() + kI * fr.col(1).cast<cplx>());
  return to_sector(ChiralOp{a, Chirality::C}, chirality);
}

ChiralOp gen_generic(std::uint64_t seed, Chirality chirality) {
  Rng rng(seed);
  const SkewOp f = rng.skew();
  return chirality == Chirality::C ? c_map(f) : cbar_map(f);
}

namespace {

// Canonical frame: s = (1, k) is an eigenvector of A = lambda k with eigenvalue
// lambda, and is annihilated by any multiple of i + i j.
struct Frame {
  Vec3C i, j, k;
  Vec4 s_plus, s_minus;
};

Frame random_frame(Rng& rng) {
  const Eigen::Matrix3d fr = rng.frame();
  Frame f{fr.col(0).cast<cplx>(), fr.col(1).cast<cplx>(), fr.col(2).cast<cplx>(), Vec4::Zero(), Vec4::Zero()};
  f.s_plus << 1.0, fr.col(2);
  f.s_minus << 1.0, -fr.col(2);
  return f;
}

}  // namespace

SharedPair gen_shared_pair(std::uint64_t seed, Chirality chirality) {
  Rng rng(seed);
  const Frame fr = random_frame(rng);
  const cplx lam = random_complex(rng, 0.3, 2.5);
  const cplx e = random_complex(rng, 0.2, 2.0);
  const Mat4 l = random_lorentz(rng);
  const ChiralOp f = conjugate_by(l, {lam * fr.k, Chirality::C});
  const ChiralOp n = conjugate_by(l, {e * (fr.i + kI * fr.j), Chirality::C});
  return {to_sector(f, chirality), to_sector(n, chirality), transport(l, fr.s_plus), to_sector(lam, chirality), 0.0};
}

SharedPair gen_shared_generic_pair(std::uint64_t seed, Chirality chirality) {
  Rng rng(seed);
  const Frame fr = random_frame(rng);
  const cplx lam = random_complex(rng, 0.3, 2.5);
  const cplx mu = random_complex(rng, 0.3, 2.5);
  const Vec3C null_dir = fr.i + kI * fr.j;
  const cplx e1 = random_complex(rng, 0.0, 1.5);
  const cplx e2 = random_complex(rng, 0.0, 1.5);
  const Mat4 l = random_lorentz(rng);
  const ChiralOp f = conjugate_by(l, {lam * fr.k + e1 * null_dir, Chirality::C});
  const ChiralOp g = conjugate_by(l, {mu * fr.k + e2 * null_dir, Chirality::C});
  return {to_sector(f, chirality), to_sector(g, chirality), transport(l, fr.s_plus), to_sector(lam, chirality),
          to_sector(mu, chirality)};
}

OpposedNullPair gen_opposed_null_pair(std::uint64_t seed, Chirality chirality) {
  Rng rng(seed);
  const Frame fr = random_frame(rng);
  const cplx lam = random_complex(rng, 0.3, 2.5);
  const cplx e = random_complex(rng, 0.2, 2.0);
  const cplx e_dag = random_complex(rng, 0.2, 2.0);
  const Mat4 l = random_lorentz(rng);
  // (j, i) is left-handed about k, so j + i i annihilates (1, -k).
  const ChiralOp f = conjugate_by(l, {lam * fr.k, Chirality::C});
  const ChiralOp n = conjugate_by(l, {e * (fr.i + kI * fr.j), Chirality::C});
  const ChiralOp n_dag = conjugate_by(l, {e_dag * (fr.j + kI * fr.i), Chirality::C});
  return {to_sector(f, chirality),      to_sector(n, chirality),        to_sector(n_dag, chirality),
          transport(l, fr.s_plus), transport(l, fr.s_minus), to_sector(lam, chirality)};
}

// --- identities -----------------------------------------------------------

ScalarCheck check_shared_eigenvector_inner_product(const SharedPair& p) {
  return make_check("shared_eigenvector_inner_product", inner_chiral(p.f, p.g), p.lambda_f * p.lambda_g);
}

IdentityCheck check_null_anticommutation(const SharedPair& p) {
  const Mat4C f = p.f.matrix();
  const Mat4C g = p.g.matrix();
  return make_check("null_anticommutation", f * g + g * f, Mat4C::Zero());
}

IdentityCheck check_shared_null_bracket(const SharedPair& p) {
  return make_check("shared_null_bracket", commutator(p.f.matrix(), p.g.matrix()), 2.0 * p.lambda_f * p.g.matrix());
}

IdentityCheck check_shared_null_product(const SharedPair& p) {
  return make_check("shared_null_product", p.f.matrix() * p.g.matrix(), p.lambda_f * p.g.matrix());
}

IdentityCheck check_opposed_null_bracket(const OpposedNullPair& p) {
  const cplx k = 2.0 * inner_chiral(p.n, p.n_dag) / p.lambda_f;
  return make_check("opposed_null_bracket", commutator(p.n.matrix(), p.n_dag.matrix()), k * p.f.matrix());
}

IdentityCheck check_sandwich(const ChiralOp& f, const ChiralOp& g) {
  require_same_sector(f, g);
  const Mat4C fm = f.matrix();
  const Mat4C gm = g.matrix();
  const Mat4C rhs = 2.0 * inner_chiral(f, g) * gm - lambda(g).squared * fm;
  return make_check("sandwich", gm * fm * gm, rhs);
}

IdentityCheck check_product(const ChiralOp& f, const ChiralOp& g) {
  require_same_sector(f, g);
  const Mat4C rhs = inner_chiral(f, g) * Mat4C::Identity() + 0.5 * bracket_chiral(f, g).matrix();
  return make_check("product", f.matrix() * g.matrix(), rhs);
}

ExpComposition compose_exponentials(const ChiralOp& f, const ChiralOp& g) {
  require_same_sector(f, g);
  const cplx zf = lambda(f).squared;
  const cplx zg = lambda(g).squared;
  ExpComposition out;
  out.a = scalar::cosh_sq(zf);
  out.b = scalar::sinhc_sq(zf);
  out.alpha = scalar::cosh_sq(zg);
  out.beta = scalar::sinhc_sq(zg);
  out.cosh_lambda_D = out.a * out.alpha + out.b * out.beta * inner_chiral(f, g);

  const Vec3C w = out.b * out.alpha * f.A + out.a * out.beta * g.A + 0.5 * out.b * out.beta * bracket_chiral(f, g).A;
  // On the principal branch sinh(lambda_D)/lambda_D vanishes only at cosh(lambda_D) = -1;
  // acosh is too ill-conditioned there to test the quotient itself.
  if (std::abs(out.cosh_lambda_D + 1.0) < 1e-10)
    throw Error(ErrorKind::Unresolvable, "sinh(lambda_D)/lambda_D vanishes; D is fixed only modulo 2 pi i");
  const cplx lam_d = std::acosh(out.cosh_lambda_D);
  const cplx sinhc_d = scalar::sinhc_sq(lam_d * lam_d);
  if (std::abs(sinhc_d) < 1e-12)
    throw Error(ErrorKind::Unresolvable, "sinh(lambda_D)/lambda_D vanishes; D is fixed only modulo 2 pi i");
  out.D = ChiralOp{w / sinhc_d, f.chirality};
  out.residual = max_abs(Mat4C(exp_chiral(f) * exp_chiral(g)) - exp_chiral(out.D));
  return out;
}

IdentityCheck check_exp_commutator(const ChiralOp& f, const ChiralOp& g) {
  require_same_sector(f, g);
  const cplx coeff = scalar::sinhc_sq(lambda(f).squared) * scalar::sinhc_sq(lambda(g).squared);
  return make_check("exp_commutator", commutator(exp_chiral(f), exp_chiral(g)),
                    coeff * commutator(f.matrix(), g.matrix()));
}

namespace {

void fill_rotation(ExpEquality& out, const ChiralOp& delta, double tol, double scale) {
  if (delta.A.norm() <= tol * scale) {
    out.n = 0;
    return;
  }
  const cplx lam = lambda(delta).value;
  out.n = static_cast<int>(std::lround(lam.imag() / kTwoPi));
  if (out.n == 0) {
    // e^F = e^G without F - G being a multiple of 2 pi times a unit rotation.
    out.rotation_residual = std::abs(lam);
    return;
  }
  out.b_hat = (1.0 / (kTwoPi * out.n)) * delta;
  out.b_hat_real = real_preimage(out.b_hat);
  out.rotation_residual = std::abs(lambda(out.b_hat).squared + 1.0);
}

}  // namespace

ExpEquality classify_exp_equality(const ChiralOp& f, const ChiralOp& g, double tol) {
  require_same_sector(f, g);
  const Mat4C ef = exp_chiral(f);
  const Mat4C eg = exp_chiral(g);
  const double scale = 1.0 + max_abs(ef);
  ExpEquality out;
  out.exp_residual = max_abs(ef - eg);
  out.both_null = is_null(f) && is_null(g);
  if (out.exp_residual > tol * scale) return out;

  const Mat4C id = Mat4C::Identity();
  if (max_abs(ef - id) <= tol * scale || max_abs(ef + id) <= tol * scale)
    throw Error(ErrorKind::ExcludedCase, "e^F = +-I lies outside the hypotheses");

  out.equal = true;
  out.commutator_residual = max_abs(commutator(f.matrix(), g.matrix()));
  fill_rotation(out, f - g, tol, 1.0 + f.A.norm() + g.A.norm());
  return out;
}

ExpEquality classify_exp_equality(const SkewOp& f, const SkewOp& g, double tol) {
  const Mat4 ef = exp_real(f);
  const Mat4 eg = exp_real(g);
  const double scale = 1.0 + max_abs(ef);
  ExpEquality out;
  out.exp_residual = max_abs(ef - eg);
  out.both_null = classify(f) == OpClass::Null && classify(g) == OpClass::Null;
  if (out.exp_residual > tol * scale) return out;

  if (max_abs(ef - Mat4::Identity()) <= tol * scale)
    throw Error(ErrorKind::ExcludedCase, "e^F = I lies outside the hypotheses");

  out.equal = true;
  const Mat4 fm = f.matrix();
  const Mat4 gm = g.matrix();
  out.commutator_residual = max_abs(Mat4(fm * gm - gm * fm));
  fill_rotation(out, c_map(f - g), tol, 1.0 + f.norm() + g.norm());
  if (out.n != 0) out.b_hat_real = (1.0 / (kTwoPi * out.n)) * (f - g);
  return out;
}

ScalarCheck check_commutator_eigenvalue(const ChiralOp& a, const ChiralOp& b) {
  require_same_sector(a, b);
  const Mat4C m = commutator(a.matrix(), b.matrix());
  const cplx lhs = (m * m)(0, 0);
  const cplx ab = inner_chiral(a, b);
  const cplx rhs = 4.0 * (ab * ab - lambda(a).squared * lambda(b).squared);
  return make_check("commutator_eigenvalue", lhs, rhs);
}

ScalarCheck check_commutator_eigenvalue(const SkewOp& a, const SkewOp& b) {
  const Mat4 am = a.matrix();
  const Mat4 bm = b.matrix();
  const Mat4C m = c_map(SkewOp::from_matrix(am * bm - bm * am)).matrix();
  const cplx lhs = (m * m)(0, 0);
  const ChiralOp ca = c_map(a);
  const ChiralOp cb = c_map(b);
  const cplx ab = inner_chiral(ca, cb);
  const cplx rhs = ab * ab - lambda(ca).squared * lambda(cb).squared;
  return make_check("commutator_eigenvalue_real", lhs, rhs);
}

namespace {

void require_null_pair(const ChiralOp& a, const ChiralOp& c) {
  require_same_sector(a, c);
  if (!is_null(a) || !is_null(c)) throw Error(ErrorKind::InvalidInput, "both operands must be null");
}

bool orthogonal_nulls(const ChiralOp& a, const ChiralOp& c) {
  return std::abs(inner_chiral(a, c)) <= 1e-12 * (1.0 + a.A.squaredNorm() + c.A.squaredNorm());
}

}  // namespace

IdentityCheck check_null_product(const ChiralOp& a, const ChiralOp& c) {
  require_null_pair(a, c);
  const Mat4C lhs = exp_chiral(a) * exp_chiral(c);
  const Mat4C id = Mat4C::Identity();
  if (orthogonal_nulls(a, c)) return make_check("null_product", lhs, Mat4C(id + a.matrix() + c.matrix()));
  const cplx k = inner_chiral(a, c);
  const ChiralOp e_hat = (1.0 / (2.0 * k)) * bracket_chiral(a, c);
  const Mat4C rhs = (1.0 + k) * id + a.matrix() + c.matrix() + k * e_hat.matrix();
  return make_check("null_product", lhs, rhs);
}

IdentityCheck check_null_product_vector(const ChiralOp& a, const ChiralOp& c) {
  require_null_pair(a, c);
  const Vec3C v = a.A + c.A + sector_sign(a.chirality) * kI * cross(a.A, c.A);
  // With lambda_A = lambda_C = 0 the composition scalars reduce to cosh(lambda_D) = 1 + <A, C>.
  if (std::abs(2.0 + inner_chiral(a, c)) < 1e-10)
    throw Error(ErrorKind::Unresolvable, "sinh(lambda_D)/lambda_D vanishes; D is fixed only modulo 2 pi i");
  const cplx lam_d = std::acosh(1.0 + inner_chiral(a, c));
  const cplx sinhc_d = scalar::sinhc_sq(lam_d * lam_d);
  if (std::abs(sinhc_d) < 1e-12)
    throw Error(ErrorKind::Unresolvable, "sinh(lambda_D)/lambda_D vanishes; D is fixed only modulo 2 pi i");
  const ChiralOp d{v / sinhc_d, a.chirality};
  return make_check("null_product_vector", exp_chiral(d), Mat4C(exp_chiral(a) * exp_chiral(c)));
}

UnitBoostCheck null_product_unit_boost(const ChiralOp& a, const ChiralOp& c) {
  require_null_pair(a, c);
  if (orthogonal_nulls(a, c)) throw Error(ErrorKind::InvalidInput, "<A, C> = 0 leaves E_hat undefined");
  UnitBoostCheck out;
  out.e_hat = (1.0 / (2.0 * inner_chiral(a, c))) * bracket_chiral(a, c);
  out.lambda_sq_residual = std::abs(lambda(out.e_hat).squared - 1.0);
  out.orthogonality = std::max(std::abs(inner_chiral(out.e_hat, a)), std::abs(inner_chiral(out.e_hat, c)));
  return out;
}

IdentityCheck check_conjugation(const ChiralOp& f, const ChiralOp& g) {
  require_same_sector(f, g);
  const cplx z = lambda(g).squared;
  const cplx a = scalar::cosh_sq(z);
  const cplx b = scalar::sinhc_sq(z);
  const Mat4C lhs = exp_chiral(-g) * f.matrix() * exp_chiral(g);
  const Mat4C rhs = (a * a + b * b * z) * f.matrix() - 2.0 * inner_chiral(f, g) * b * b * g.matrix() +
                    a * b * bracket_chiral(f, g).matrix();
  return make_check("conjugation", lhs, rhs);
}

IdentityCheck check_conjugation_of_null(const SharedPair& p) {
  const Mat4C lhs = exp_chiral(-p.f) * p.g.matrix() * exp_chiral(p.f);
  return make_check("conjugation_of_null", lhs, std::exp(-2.0 * p.lambda_f) * p.g.matrix());
}

IdentityCheck check_conjugation_by_null(const SharedPair& p) {
  const Mat4C lhs = exp_chiral(-p.g) * p.f.matrix() * exp_chiral(p.g);
  return make_check("conjugation_by_null", lhs, Mat4C(p.f.matrix() + 2.0 * p.lambda_f * p.g.matrix()));
}

namespace {

// 2 sin^2(x/2) / x^2 and its hyperbolic twin, both equal to 1/2 at x = 0.
double half_angle_sq(double x, bool hyperbolic) {
  if (std::abs(x) < 1e-4) return 0.5 + (hyperbolic ? 1.0 : -1.0) * x * x / 24.0;
  const double s = hyperbolic ? std::sinh(0.5 * x) : std::sin(0.5 * x);
  return 2.0 * s * s / (x * x);
}

double sinc(double x, bool hyperbolic) {
  if (std::abs(x) < 1e-4) return 1.0 + (hyperbolic ? 1.0 : -1.0) * x * x / 6.0;
  return (hyperbolic ? std::sinh(x) : std::sin(x)) / x;
}

}  // namespace

IdentityCheck check_real_exp_closed_form(const SkewOp& f, RealExpKind kind, double t_scale) {
  const ChiralOp cf = c_map(f);
  const cplx lam = lambda(cf).value;
  const double tol = 1e-9 * (1.0 + std::abs(lam));
  const Mat4C fm = f.matrix().cast<cplx>();
  const Mat4C t = t_scale * cf.matrix() * cbar_map(f).matrix();
  const Mat4C id = Mat4C::Identity();
  Mat4C rhs;
  switch (kind) {
    case RealExpKind::Imaginary: {
      if (std::abs(lam.real()) > tol) throw Error(ErrorKind::InvalidInput, "lambda_cF is not imaginary");
      const double th = lam.imag();
      const double c = std::cos(0.5 * th);
      rhs = c * c * id + half_angle_sq(th, false) * t + sinc(th, false) * fm;
      break;
    }
    case RealExpKind::Real: {
      if (std::abs(lam.imag()) > tol) throw Error(ErrorKind::InvalidInput, "lambda_cF is not real");
      const double mu = lam.real();
      const double c = std::cosh(0.5 * mu);
      rhs = c * c * id + half_angle_sq(mu, true) * t + sinc(mu, true) * fm;
      break;
    }
    case RealExpKind::Null:
      if (!is_null(cf)) throw Error(ErrorKind::InvalidInput, "F is not null");
      rhs = id + fm + 0.5 * fm * fm;
      break;
  }
  return make_check("real_exp_closed_form", exp_real(f).cast<cplx>(), rhs);
}

SkewOp gen_real_exp_case(std::uint64_t seed, RealExpKind kind) {
  Rng rng(seed);
  const Eigen::Matrix3d fr = rng.frame();
  SkewOp f;
  switch (kind) {
    case RealExpKind::Imaginary: {
      const double b = rng.uniform(0.3, 2.5);
      f.B = b * fr.col(2);
      f.E = rng.uniform(0.0, 0.9) * b * fr.col(0);
      break;
    }
    case RealExpKind::Real: {
      const double e = rng.uniform(0.3, 2.5);
      f.E = e * fr.col(2);
      f.B = rng.uniform(0.0, 0.9) * e * fr.col(0);
      break;
    }
    case RealExpKind::Null: {
      const double e = rng.uniform(0.2, 2.0);
      f.E = e * fr.col(0);
      f.B = e * fr.col(1);
      break;
    }
  }
  return f;
}

IdentityCheck check_t_rotation(const SkewOp& f, int n) {
  const cplx lam = lambda(c_map(f)).value;
  if (std::abs(lam) < 1e-9 || std::abs(lam.real()) > 1e-9 * (1.0 + std::abs(lam)))
    throw Error(ErrorKind::InvalidInput, "lambda_cF must be imaginary and nonzero");
  // B = -(i / lambda) F = -F / Im(lambda) is real for imaginary lambda.
  const SkewOp b = (-1.0 / lam.imag()) * f;
  const double lam_t = 0.5 * std::norm(lam);
  const Mat4 rhs = lam_t * exp_real((2.0 * n + 1.0) * kPi * b);
  return make_check("t_operator_rotation", t_operator(f), rhs.cast<cplx>());
}

TNormalisationReport t_normalisation_report(std::int64_t samples, std::uint64_t seed) {
  TNormalisationReport rep;
  rep.samples = samples;
  for (std::int64_t i = 0; i < samples; ++i) {
    const std::uint64_t s = sample_seed(seed, static_cast<std::uint64_t>(i));
    const SkewOp fi = gen_real_exp_case(s, RealExpKind::Imaginary);
    const SkewOp fr = gen_real_exp_case(s, RealExpKind::Real);
    const SkewOp fn = gen_real_exp_case(s, RealExpKind::Null);
    rep.half_imag_residual = std::max(rep.half_imag_residual, check_real_exp_closed_form(fi, RealExpKind::Imaginary, 0.5).residual);
    rep.half_real_residual = std::max(rep.half_real_residual, check_real_exp_closed_form(fr, RealExpKind::Real, 0.5).residual);
    rep.quarter_imag_residual =
        std::max(rep.quarter_imag_residual, check_real_exp_closed_form(fi, RealExpKind::Imaginary, 0.25).residual);
    rep.quarter_real_residual =
        std::max(rep.quarter_real_residual, check_real_exp_closed_form(fr, RealExpKind::Real, 0.25).residual);
    const Mat4C prod = c_map(fn).matrix() * cbar_map(fn).matrix();
    const Mat4C f2 = (fn.matrix() * fn.matrix()).cast<cplx>();
    rep.half_null_square = std::max(rep.half_null_square, max_abs(Mat4C(prod - f2)));
    rep.quarter_null_square = std::max(rep.quarter_null_square, max_abs(Mat4C(0.5 * prod - f2)));
  }
  auto verdict = [](bool half, bool quarter) -> std::string {
    if (half && !quarter) return "1/2";
    if (quarter && !half) return "1/4";
    return half ? "both" : "neither";
  };
  constexpr double tol = 1e-9;
  rep.closed_form_factor = verdict(std::max(rep.half_imag_residual, rep.half_real_residual) <= tol,
                                   std::max(rep.quarter_imag_residual, rep.quarter_real_residual) <= tol);
  rep.null_square_factor = verdict(rep.half_null_square <= tol, rep.quarter_null_square <= tol);
  return rep;
}

// --- suite ----------------------------------------------------------------

namespace {

struct SuiteItem {
  const char* name;
  double tol;
  std::function<double(std::uint64_t)> residual;
};

double bool_residual(bool ok) { return ok ? 0.0 : 1.0; }

double exp_equality_residual(const ExpEquality& got, int n, const ChiralOp& b_hat) {
  if (!got.equal || got.n != n) return 1.0;
  return std::max({got.exp_residual, got.rotation_residual, got.commutator_residual, (got.b_hat.A - b_hat.A).norm()});
}

const std::vector<SuiteItem>& suite_items() {
  static const std::vector<SuiteItem> items = {
      {"shared_eigenvector_inner_product", 1e-10,
       [](std::uint64_t s) {
         return check_shared_eigenvector_inner_product(gen_shared_generic_pair(s, sample_chirality(s))).residual;
       }},
      {"null_anticommutation", 1e-10,
       [](std::uint64_t s) { return check_null_anticommutation(gen_shared_pair(s, sample_chirality(s))).residual; }},
      {"shared_null_bracket", 1e-10,
       [](std::uint64_t s) { return check_shared_null_bracket(gen_shared_pair(s, sample_chirality(s))).residual; }},
      {"shared_null_product", 1e-10,
       [](std::uint64_t s) { return check_shared_null_product(gen_shared_pair(s, sample_chirality(s))).residual; }},
      {"opposed_null_bracket", 1e-10,
       [](std::uint64_t s) {
         return check_opposed_null_bracket(gen_opposed_null_pair(s, sample_chirality(s))).residual;
       }},
      {"product", 1e-12,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_product(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"sandwich", 1e-12,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_sandwich(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"exp_composition", 1e-9,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return compose_exponentials(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"exp_composition_cosh", 1e-9,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         const ExpComposition c = compose_exponentials(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch));
         return std::abs(scalar::cosh_sq(lambda(c.D).squared) - c.cosh_lambda_D);
       }},
      {"exp_commutator", 1e-10,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_exp_commutator(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"exp_equality_chiral", 1e-9,
       [](std::uint64_t s) {
         const ChiralOp g = gen_generic(sample_seed(s, 1), sample_chirality(s));
         const ChiralOp b_hat = (kI / lambda(g).value) * g;
         const int n = 1 + static_cast<int>((s >> 8) & 1U);
         const ExpEquality got = classify_exp_equality(g + (kTwoPi * n) * b_hat, g);
         return exp_equality_residual(got, n, b_hat);
       }},
      {"exp_equality_real", 1e-9,
       [](std::uint64_t s) {
         const SkewOp g = Rng(sample_seed(s, 1)).skew();
         const ChiralOp cg = c_map(g);
         const ChiralOp b_hat = (kI / lambda(cg).value) * cg;
         const SkewOp r = real_preimage(b_hat);
         const int n = 1 + static_cast<int>((s >> 8) & 1U);
         const ExpEquality got = classify_exp_equality(g + (kTwoPi * n) * r, g);
         return exp_equality_residual(got, n, b_hat);
       }},
      {"exp_equality_null", 1e-9,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         const ChiralOp a = gen_null(sample_seed(s, 1), ch);
         const ChiralOp c = gen_null(sample_seed(s, 2), ch);
         const ExpEquality same = classify_exp_equality(a, a);
         const ExpEquality different = classify_exp_equality(a, c);
         return bool_residual(same.equal && same.n == 0 && same.both_null && !different.equal);
       }},
      {"commutator_eigenvalue", 1e-10,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_commutator_eigenvalue(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"commutator_eigenvalue_real", 1e-10,
       [](std::uint64_t s) {
         return check_commutator_eigenvalue(Rng(sample_seed(s, 1)).skew(), Rng(sample_seed(s, 2)).skew()).residual;
       }},
      {"null_product", 1e-10,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         const ChiralOp a = gen_null(sample_seed(s, 1), ch);
         // Every fourth sample takes the orthogonal branch, where C must be parallel to A.
         const ChiralOp c = (s & 6U) == 0 ? std::polar(0.7, 1.3) * a : gen_null(sample_seed(s, 2), ch);
         return check_null_product(a, c).residual;
       }},
      {"null_product_vector", 1e-10,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_null_product_vector(gen_null(sample_seed(s, 1), ch), gen_null(sample_seed(s, 2), ch)).residual;
       }},
      {"null_product_unit_boost", 1e-10,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         const UnitBoostCheck u = null_product_unit_boost(gen_null(sample_seed(s, 1), ch), gen_null(sample_seed(s, 2), ch));
         return std::max(u.lambda_sq_residual, u.orthogonality);
       }},
      {"conjugation", 1e-9,
       [](std::uint64_t s) {
         const Chirality ch = sample_chirality(s);
         return check_conjugation(gen_generic(sample_seed(s, 1), ch), gen_generic(sample_seed(s, 2), ch)).residual;
       }},
      {"conjugation_of_null", 1e-9,
       [](std::uint64_t s) { return check_conjugation_of_null(gen_shared_pair(s, sample_chirality(s))).residual; }},
      {"conjugation_by_null", 1e-9,
       [](std::uint64_t s) { return check_conjugation_by_null(gen_shared_pair(s, sample_chirality(s))).residual; }},
      {"real_exp_closed_form", 1e-10,
       [](std::uint64_t s) {
         const auto kind = static_cast<RealExpKind>(s % 3);
         return check_real_exp_closed_form(gen_real_exp_case(s, kind), kind).residual;
       }},
      {"t_operator_rotation", 1e-9,
       [](std::uint64_t s) {
         const int n = static_cast<int>(s % 3) - 1;
         return check_t_rotation(gen_real_exp_case(s, RealExpKind::Imaginary), n).residual;
       }},
  };
  return items;
}

const SuiteItem& find_item(const std::string& name) {
  for (const SuiteItem& it : suite_items())
    if (name == it.name) return it;
  throw Error(ErrorKind::InvalidInput, "unknown identity '" + name + "'");
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const SuiteItem& it : suite_items()) out.emplace_back(it.name);
  return out;
}

double identity_residual(const std::string& name, std::uint64_t sample) { return find_item(name).residual(sample); }

double identity_tolerance(const std::string& name) { return find_item(name).tol; }

std::vector<SuiteEntry> run_identity_suite(std::int64_t samples, std::uint64_t seed, Exec exec, double tol_scale) {
  std::vector<SuiteEntry> out;
  std::uint64_t k = 0;
  for (const SuiteItem& it : suite_items()) {
    const double tol = it.tol * tol_scale;
    out.push_back({it.name, tol, sweep(samples, sample_seed(seed, 1000 + k++), tol, it.residual, exec)});
  }
  return out;
}

}  // namespace lorcal
