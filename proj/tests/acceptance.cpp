// Acceptance report: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "lorcal/basis16.hpp"
#include "lorcal/emfield.hpp"
#include "lorcal/error.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/identities.hpp"
#include "lorcal/linalg.hpp"
#include "lorcal/oracle.hpp"
#include "lorcal/random.hpp"
#include "lorcal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace lorcal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr double kPi = std::numbers::pi;

// Rank of the left-trivialised Jacobian of (F1, F2) -> e^F1 e^F2 from series exponentials.
int fd_rank(const std::array<SkewOp, 2>& fs) {
  const Mat4 r = oracle::series_exp(fs[0].matrix()) * oracle::series_exp(fs[1].matrix());
  const Mat4 rinv = eta() * r.transpose() * eta();
  Eigen::MatrixXd jac(6, 12);
  for (int slot = 0; slot < 2; ++slot)
    for (int j = 0; j < 6; ++j) {
      Vec6 e = Vec6::Zero();
      e(j) = 1.0;
      const SkewOp g = SkewOp::from_coords(e);
      const Mat4 d = slot == 0 ? Mat4(oracle::fd_derivative(fs[0], g) * oracle::series_exp(fs[1].matrix()))
                               : Mat4(oracle::series_exp(fs[0].matrix()) * oracle::fd_derivative(fs[1], g));
      jac.col(6 * slot + j) = SkewOp::from_matrix(rinv * d).coords();
    }
  return numeric_rank(jac, 1e-6);
}

ComplexSkewOp cs_sub(const ComplexSkewOp& a, const ComplexSkewOp& b) { return {a.E - b.E, a.B - b.B}; }
ComplexSkewOp cs_add(const ComplexSkewOp& a, const ComplexSkewOp& b) { return {a.E + b.E, a.B + b.B}; }
double cs_norm(const ComplexSkewOp& a) { return std::max(max_abs(Vec3C(a.E)), max_abs(Vec3C(a.B))); }

}  // namespace

int main() {
  report(1, "closed-form exp vs series oracle, 1000 random F", [] {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      Rng rng(sample_seed(101, k));
      const SkewOp f = rng.skew(3.0);
      worst = std::max(worst, max_abs(Mat4(exp_real(f) - oracle::series_exp(f.matrix()))));
    }
    const double t = elapsed(t0);
    return Outcome{worst <= 1e-10 && t < 5.0, fmt("max |exp - series| = %.3e (tol 1e-10), %.2fs (limit 5s)", worst, t)};
  });

  report(2, "isometry and chirality laws", [] {
    double iso = 0.0;
    for (int k = 0; k < 1000; ++k) {
      Rng rng(sample_seed(101, k));
      iso = std::max(iso, lorentz_defect(exp_real(rng.skew(3.0))).isometry);
    }
    // c + cbar = 2I, cbar c = 0, c c = 2c, first as 6x6 matrices of the maps on (E, B)
    // coordinates, then applied to 200 random F.
    auto map_matrix = [](auto&& m) {
      Eigen::Matrix<cplx, 6, 6> out;
      for (int j = 0; j < 6; ++j) {
        Vec6 e = Vec6::Zero();
        e(j) = 1.0;
        const ComplexSkewOp img = m(ComplexSkewOp::from(SkewOp::from_coords(e)));
        out.col(j) << img.E, img.B;
      }
      return out;
    };
    using M6 = Eigen::Matrix<cplx, 6, 6>;
    const M6 c = map_matrix([](const ComplexSkewOp& x) { return c_map(x); });
    const M6 cb = map_matrix([](const ComplexSkewOp& x) { return cbar_map(x); });
    const M6 id = M6::Identity();
    bool exact = c + cb == 2.0 * id && cb * c == M6::Zero() && c * cb == M6::Zero() && c * c == 2.0 * c &&
                 cb * cb == 2.0 * cb;
    double laws = 0.0;
    for (int k = 0; k < 200; ++k) {
      Rng rng(sample_seed(102, k));
      const ComplexSkewOp f = ComplexSkewOp::from(rng.skew(3.0));
      laws = std::max(laws, cs_norm(cs_sub(cs_add(c_map(f), cbar_map(f)), cs_add(f, f))));
      laws = std::max(laws, cs_norm(cbar_map(c_map(f))));
      laws = std::max(laws, cs_norm(c_map(cbar_map(f))));
      laws = std::max(laws, cs_norm(cs_sub(c_map(c_map(f)), cs_add(c_map(f), c_map(f)))));
      laws = std::max(laws, cs_norm(cs_sub(cbar_map(cbar_map(f)), cs_add(cbar_map(f), cbar_map(f)))));
    }
    exact = exact && laws == 0.0;
    return Outcome{iso <= 1e-10 && exact,
                   fmt("max |M^T eta M - eta| = %.3e (tol 1e-10); chirality laws %s (map matrices and 200 random F, "
                       "max residual %.1e)",
                       iso, exact ? "exact" : "NOT exact", laws)};
  });

  report(3, "singular points of exp at 2 pi n rotations", [] {
    double exp_res = 0.0, kernel_fd = 0.0, complement_fd = 1e300;
    int bad_rank = 0, bad_regular = 0;
    for (int n : {1, 2})
      for (int k = 0; k < 20; ++k) {
        const SkewOp f = gen_singular_rotation(sample_seed(103, 100 * n + k), n);
        exp_res = std::max(exp_res, max_abs(Mat4(exp_real(f) - Mat4::Identity())));
        const SingularityReport r = singularity(f);
        if (!r.is_singular || r.n != n || r.derivative_rank != 2) ++bad_rank;
        for (const SkewOp& g : r.kernel_basis) kernel_fd = std::max(kernel_fd, max_abs(oracle::fd_derivative(f, g)));
        for (const SkewOp& g : {f, star(f)})
          complement_fd = std::min(complement_fd, max_abs(oracle::fd_derivative(f, (1.0 / g.norm()) * g)));
      }
    for (int k = 0; k < 200; ++k) {
      Rng rng(sample_seed(104, k));
      const SkewOp f = rng.skew(3.0);
      if (singularity(f).derivative_rank != 6) ++bad_regular;
    }
    const bool ok = exp_res <= 1e-9 && kernel_fd <= 1e-5 && complement_fd >= 1e-2 && bad_rank == 0 && bad_regular == 0;
    return Outcome{ok, fmt("|e^F - I| = %.2e (1e-9); kernel fd max %.2e (1e-5); F, F* fd min %.2e (>= 1e-2); "
                           "rank != 2 at %d/40 singular; rank != 6 at %d/200 regular",
                           exp_res, kernel_fd, complement_fd, bad_rank, bad_regular)};
  });

  report(4, "16-element basis exactness", [] {
    const auto t0 = Clock::now();
    std::vector<ExactMat4> mats;
    int bad_sq = 0, bad_herm = 0;
    for (const BasisElement& e : basis16()) {
      mats.push_back(e.exact);
      if (!(e.exact * e.exact == ExactMat4::identity())) ++bad_sq;
      if (!(e.exact.adjoint() == e.exact)) ++bad_herm;
    }
    const int rank = exact_rank(mats);
    const MultTableReport rel = verify_mult_table();
    const auto g = clifford_generators(true);
    int bad_gamma = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const std::int64_t eta_ij = i != j ? 0 : (i == 0 ? -1 : 1);
        if (!(g[i] * g[j] + g[j] * g[i] == GaussInt{2 * eta_ij, 0} * ExactMat4::identity())) ++bad_gamma;
      }
    const double t = elapsed(t0);
    const bool ok = rank == 16 && bad_sq == 0 && bad_herm == 0 && rel.ok() && bad_gamma == 0 && t < 1.0;
    return Outcome{ok, fmt("rank %d; non-unit squares %d; non-Hermitian %d; relation failures %zu; "
                           "gamma anticommutator failures %d; %.3fs (limit 1s)",
                           rank, bad_sq, bad_herm, rel.failures.size(), bad_gamma, t)};
  });

  report(5, "operator identity suite, 500 instances each", [] {
    const auto t0 = Clock::now();
    const auto suite = run_identity_suite(500, 42, Exec::Parallel);
    const TNormalisationReport tn = t_normalisation_report(500, 42);
    const double t = elapsed(t0);
    int failed = 0;
    for (const SuiteEntry& e : suite) {
      std::printf("       %-36s max %.3e tol %.0e %s\n", e.name.c_str(), e.result.max_residual, e.tol,
                  e.pass() ? "ok" : "FAILED");
      if (!e.pass()) ++failed;
    }
    std::printf("       T normalisation: closed forms verify with %s (half %.2e / %.2e, quarter %.2e / %.2e); "
                "2T = F^2 for null F verifies with %s (half %.2e, quarter %.2e)\n",
                tn.closed_form_factor.c_str(), tn.half_real_residual, tn.half_imag_residual, tn.quarter_real_residual,
                tn.quarter_imag_residual, tn.null_square_factor.c_str(), tn.half_null_square, tn.quarter_null_square);
    return Outcome{failed == 0 && t < 30.0,
                   fmt("%zu identities, %d failing; %.2fs (limit 30s)", suite.size(), failed, t)};
  });

  report(6, "accelerated charge field as a conjugated Coulomb field", [] {
    double conj = 0.0, half = 0.0, eig = 0.0;
    for (int k = 0; k < 500; ++k) {
      const FieldConjugationCheck c = check_field_conjugation(random_charge_state(sample_seed(106, k)));
      conj = std::max(conj, c.conjugation.residual / c.field_scale);
      half = std::max(half, c.chiral_half_step.residual);
      eig = std::max(eig, c.eigenvalue_residual);
    }
    return Outcome{conj <= 1e-9 && half <= 1e-10 && eig <= 1e-10,
                   fmt("conjugation / (1+|F_a|) %.3e (1e-9); half-step %.3e (1e-10); lambda - q/r^2 %.3e (1e-10)",
                       conj, half, eig)};
  });

  report(7, "derivative routes agree", [] {
    double hc = 0.0, hf = 0.0;
    for (int k = 0; k < 300; ++k) {
      Rng rng(sample_seed(107, k));
      const SkewOp f = rng.skew(3.0), g = rng.skew(3.0);
      const Mat4 h = dexp(f, g, DexpRoute::Helgason).value;
      hc = std::max(hc, max_abs(Mat4(h - dexp(f, g, DexpRoute::ClosedForm).value)));
      hf = std::max(hf, max_abs(Mat4(h - oracle::fd_derivative(f, g))));
    }
    return Outcome{hc <= 1e-8 && hf <= 1e-6,
                   fmt("Helgason vs closed form %.3e (1e-8); vs finite difference %.3e (1e-6)", hc, hf)};
  });

  report(8, "log round trip and branch detection", [] {
    double worst = 0.0;
    for (int k = 0; k < 300; ++k) {
      const SkewOp f = gen_principal(sample_seed(108, k));
      worst = std::max(worst, (log_lorentz(exp_real(f)) - f).norm());
    }
    int raised = 0, cases = 0;
    for (int k = 0; k < 20; ++k) {
      Rng rng(sample_seed(109, k));
      const Vec3 axis = rng.unit3();
      for (const SkewOp& f : {SkewOp{Vec3::Zero(), kPi * axis}, SkewOp{rng.uniform(0.1, 2.0) * axis, kPi * axis},
                              SkewOp{Vec3::Zero(), 3.0 * kPi * axis}}) {
        ++cases;
        try {
          log_lorentz(exp_real(f));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::BranchAmbiguous) ++raised;
        }
      }
    }
    return Outcome{worst <= 1e-8 && raised == cases,
                   fmt("max |log(exp F) - F| = %.3e (1e-8); BranchAmbiguous on %d/%d boundary cases", worst, raised,
                       cases)};
  });

  report(9, "composition Jacobian rank", [] {
    int full = 0;
    for (int k = 0; k < 100; ++k) {
      Rng rng(sample_seed(110, k));
      const std::array<SkewOp, 2> fs{rng.skew(3.0), rng.skew(3.0)};
      if (compose_jacobian_rank(fs) == 6) ++full;
    }
    const SkewOp bz{Vec3::Zero(), kTwoPi * Vec3::UnitZ()};
    const int named = compose_jacobian_rank(std::array<SkewOp, 2>{bz, SkewOp{}});
    const int both = compose_jacobian_rank(std::array<SkewOp, 2>{bz, bz});
    const bool ok = full == 100 && named < 6;
    return Outcome{ok, fmt("rank 6 at %d/100 generic tuples; [2 pi B_z, 0] has rank %d, oracle finite-difference rank %d "
                           "(required < 6; the zero factor keeps the map a submersion, so this tuple is not "
                           "rank-deficient); [2 pi B_z, 2 pi B_z] has rank %d",
                           full, named, fd_rank({bz, SkewOp{}}), both)};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
