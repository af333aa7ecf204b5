#include "lorcal/verify.hpp"

#include "lorcal/basis16.hpp"
#include "lorcal/emfield.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace lorcal {

SkewOp gen_principal(std::uint64_t seed) {
  Rng rng(seed);
  const SkewOp f = rng.skew();
  const double im = std::abs(lambda(c_map(f)).value.imag());
  const double cap = 0.9 * std::numbers::pi;
  return im > cap ? (cap / im) * f : f;
}

SkewOp gen_singular_rotation(std::uint64_t seed, int n) {
  Rng rng(seed);
  return SkewOp{Vec3::Zero(), (kTwoPi * n) * rng.unit3()};
}

namespace {

struct Check {
  const char* name;
  double tol;
  std::function<double(std::uint64_t)> residual;
};

double flag(bool ok) { return ok ? 0.0 : 1.0; }

std::vector<Check> library_checks() {
  return {
      {"exp_isometry", 1e-10,
       [](std::uint64_t s) {
         const LorentzDefect d = lorentz_defect(exp_real(Rng(s).skew()));
         return d.orthochronous ? std::max(d.isometry, d.determinant) : 1.0;
       }},
      {"dexp_helgason_vs_closed_form", 1e-8,
       [](std::uint64_t s) {
         Rng rng(s);
         const SkewOp f = rng.skew();
         const SkewOp g = rng.skew();
         return max_abs(Mat4(dexp(f, g, DexpRoute::Helgason).value - dexp(f, g, DexpRoute::ClosedForm).value));
       }},
      {"log_round_trip", 1e-8,
       [](std::uint64_t s) {
         const SkewOp f = gen_principal(s);
         return (log_lorentz(exp_real(f)) - f).norm();
       }},
      {"singular_rotation", 1e-9,
       [](std::uint64_t s) {
         const int n = 1 + static_cast<int>(s & 1U);
         const SkewOp f = gen_singular_rotation(s, n);
         const SingularityReport rep = singularity(f);
         if (!rep.is_singular || rep.n != n || rep.derivative_rank != 2) return 1.0;
         return max_abs(Mat4(exp_real(f) - Mat4::Identity()));
       }},
      {"regular_rank", 0.0,
       [](std::uint64_t s) { return flag(singularity(Rng(s).skew()).derivative_rank == 6); }},
      {"compose_rank_generic", 0.0,
       [](std::uint64_t s) {
         Rng rng(s);
         const std::array<SkewOp, 2> fs{rng.skew(), rng.skew()};
         return flag(compose_jacobian_rank(fs) == 6);
       }},
      {"basis16_exact", 0.0,
       [](std::uint64_t) {
         std::vector<ExactMat4> mats;
         bool ok = true;
         for (const BasisElement& b : basis16()) {
           mats.push_back(b.exact);
           ok = ok && b.exact * b.exact == ExactMat4::identity() && b.exact.adjoint() == b.exact;
         }
         return flag(ok && exact_rank(mats) == 16 && verify_mult_table().ok() && clifford_normalisation() == 2);
       }},
      {"field_conjugation", 1e-9,
       [](std::uint64_t s) {
         const FieldConjugationCheck c = check_field_conjugation(random_charge_state(s));
         return c.conjugation.residual / c.field_scale;
       }},
      {"field_chiral_half_step", 1e-10,
       [](std::uint64_t s) { return check_field_conjugation(random_charge_state(s)).chiral_half_step.residual; }},
      {"field_eigenvalue", 1e-10,
       [](std::uint64_t s) { return check_field_conjugation(random_charge_state(s)).eigenvalue_residual; }},
  };
}

}  // namespace

std::vector<SuiteEntry> run_library_checks(std::int64_t samples, std::uint64_t seed, Exec exec, double tol_scale) {
  std::vector<SuiteEntry> out;
  std::uint64_t k = 0;
  for (const Check& c : library_checks()) {
    const double tol = c.tol * tol_scale;
    const std::int64_t n = std::string_view(c.name) == "basis16_exact" ? 1 : samples;
    out.push_back({c.name, tol, sweep(n, sample_seed(seed, 2000 + k++), tol, c.residual, exec)});
  }
  return out;
}

std::vector<SuiteEntry> run_verify_all(std::int64_t samples, std::uint64_t seed, Exec exec, double tol_scale) {
  std::vector<SuiteEntry> out = run_identity_suite(samples, seed, exec, tol_scale);
  std::vector<SuiteEntry> more = run_library_checks(samples, seed, exec, tol_scale);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace lorcal
