#pragma once

// Executable forms of the chiral operator identities. Every check returns both
// sides and a max-entry residual instead of asserting, so sweeps, tests and the
// CLI report them uniformly.

#include "lorcal/expmap.hpp"
#include "lorcal/skew.hpp"
#include "lorcal/sweep.hpp"
#include "lorcal/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lorcal {

struct IdentityCheck {
  std::string name;
  Mat4C lhs;
  Mat4C rhs;
  double residual = 0.0;
};

struct ScalarCheck {
  std::string name;
  cplx lhs;
  cplx rhs;
  double residual = 0.0;
};

IdentityCheck make_check(std::string name, const Mat4C& lhs, const Mat4C& rhs);
ScalarCheck make_check(std::string name, cplx lhs, cplx rhs);

// --- generators -----------------------------------------------------------

/// A = E (i + i j) for a random orthonormal pair and random complex E.
ChiralOp gen_null(std::uint64_t seed, Chirality chirality = Chirality::C);
/// c (or cbar) of a random real operator with |(E, B)| <= 3.
ChiralOp gen_generic(std::uint64_t seed, Chirality chirality = Chirality::C);

/// Two operators with a common real null eigenvector s.
struct SharedPair {
  ChiralOp f;
  ChiralOp g;
  Vec4 s;          // normalised to s_t = 1
  cplx lambda_f;   // f s = lambda_f s
  cplx lambda_g;   // g s = lambda_g s
};

/// f generic, g null, both with eigenvector s (so <f, g> = 0).
SharedPair gen_shared_pair(std::uint64_t seed, Chirality chirality = Chirality::C);
/// f and g both generic with eigenvalues lambda_f, lambda_g on s.
SharedPair gen_shared_generic_pair(std::uint64_t seed, Chirality chirality = Chirality::C);

struct OpposedNullPair {
  ChiralOp f;       // generic, f s_plus = lambda_f s_plus, f s_minus = -lambda_f s_minus
  ChiralOp n;       // null, n s_plus = 0
  ChiralOp n_dag;   // null, n_dag s_minus = 0
  Vec4 s_plus;
  Vec4 s_minus;
  cplx lambda_f;
};

OpposedNullPair gen_opposed_null_pair(std::uint64_t seed, Chirality chirality = Chirality::C);

// --- identities -----------------------------------------------------------

/// <F, G> = lambda_F lambda_G for operators sharing a null eigenvector.
ScalarCheck check_shared_eigenvector_inner_product(const SharedPair& p);
/// With one of the pair null, FG + GF = 0.
IdentityCheck check_null_anticommutation(const SharedPair& p);
/// [F, N] = 2 lambda_F N.
IdentityCheck check_shared_null_bracket(const SharedPair& p);
/// F N = lambda_F N.
IdentityCheck check_shared_null_product(const SharedPair& p);
/// [N, N_dag] = (2 <N, N_dag> / lambda_F) F.
IdentityCheck check_opposed_null_bracket(const OpposedNullPair& p);

/// G F G = 2 <F, G> G - lambda_G^2 F. Throws MixedChirality.
IdentityCheck check_sandwich(const ChiralOp& f, const ChiralOp& g);
/// F G = <F, G> I + [F, G] / 2. Throws MixedChirality.
IdentityCheck check_product(const ChiralOp& f, const ChiralOp& g);

struct ExpComposition {
  ChiralOp D;
  cplx a, b, alpha, beta;
  cplx cosh_lambda_D;
  /// max |e^F e^G - e^D|
  double residual = 0.0;
};

/// e^F e^G = e^D. Throws MixedChirality, or Unresolvable when sinh(lambda_D)/lambda_D
/// vanishes and D is fixed only up to a multiple of 2 pi i.
ExpComposition compose_exponentials(const ChiralOp& f, const ChiralOp& g);

/// [e^F, e^G] = (sinh lambda_F sinh lambda_G / lambda_F lambda_G) [F, G].
IdentityCheck check_exp_commutator(const ChiralOp& f, const ChiralOp& g);

struct ExpEquality {
  bool equal = false;
  int n = 0;
  /// (F - G) / (2 pi n) when n != 0; lambda = +-i and commutes with F and G.
  ChiralOp b_hat;
  SkewOp b_hat_real;
  bool both_null = false;
  double exp_residual = 0.0;      // max |e^F - e^G|
  double rotation_residual = 0.0; // |lambda_{B_hat}^2 + 1|, 0 when n = 0
  double commutator_residual = 0.0;
};

/// Decides e^F = e^G and, when equal, recovers F = G + 2 pi n B_hat.
/// Throws ExcludedCase when e^F = +-I, MixedChirality on mixed input.
ExpEquality classify_exp_equality(const ChiralOp& f, const ChiralOp& g, double tol = 1e-9);
/// Real form; only e^F = I is excluded.
ExpEquality classify_exp_equality(const SkewOp& f, const SkewOp& g, double tol = 1e-9);

/// lambda^2_{[A, B]} = 4 (<A, B>^2 - lambda_A^2 lambda_B^2).
ScalarCheck check_commutator_eigenvalue(const ChiralOp& a, const ChiralOp& b);
/// lambda^2_{c[A, B]} = <cA, cB>^2 - lambda_cA^2 lambda_cB^2 for real A, B.
ScalarCheck check_commutator_eigenvalue(const SkewOp& a, const SkewOp& b);

/// e^A e^C = (1 + <A, C>) I + A + C + <A, C> E_hat with E_hat = [A, C] / 2<A, C>,
/// or I + A + C when <A, C> = 0. Throws InvalidInput unless both are null.
IdentityCheck check_null_product(const ChiralOp& a, const ChiralOp& c);
/// (sinh lambda_D / lambda_D) D = A + C + i A x C (sign of the cross term follows
/// the sector), with D from compose_exponentials.
IdentityCheck check_null_product_vector(const ChiralOp& a, const ChiralOp& c);

struct UnitBoostCheck {
  ChiralOp e_hat;
  double lambda_sq_residual = 0.0;  // |lambda^2 - 1|
  double orthogonality = 0.0;       // max(|<E_hat, A>|, |<E_hat, C>|)
};

/// Requires <A, C> != 0 (InvalidInput otherwise).
UnitBoostCheck null_product_unit_boost(const ChiralOp& a, const ChiralOp& c);

/// e^{-G} F e^G = (cosh^2 + sinh^2) F - 2<F, G> (sinh^2 / lambda^2) G + (sinh cosh / lambda) [F, G].
IdentityCheck check_conjugation(const ChiralOp& f, const ChiralOp& g);
/// e^{-F} N e^F = e^{-2 lambda_F} N for a shared pair.
IdentityCheck check_conjugation_of_null(const SharedPair& p);
/// e^{-N} F e^N = F + 2 lambda_F N for a shared pair.
IdentityCheck check_conjugation_by_null(const SharedPair& p);

enum class RealExpKind { Imaginary, Real, Null };

/// Closed form of e^F in terms of I, T_F and F, built with T_F = t_scale cF cbarF.
/// kind selects the cos, cosh or polynomial version; residual is against exp_real.
IdentityCheck check_real_exp_closed_form(const SkewOp& f, RealExpKind kind, double t_scale = 0.5);
/// Random F with lambda_cF imaginary, real or zero.
SkewOp gen_real_exp_case(std::uint64_t seed, RealExpKind kind);

/// T_F = lambda_T e^{(2n+1) pi B} with B = -(i / lambda_cF) F and lambda_T = |lambda|^2 / 2.
/// Requires lambda_cF imaginary and nonzero (InvalidInput otherwise).
IdentityCheck check_t_rotation(const SkewOp& f, int n);

struct TNormalisationReport {
  double half_real_residual = 0.0;    // T = cF cbarF / 2 in the cosh form
  double half_imag_residual = 0.0;    // T = cF cbarF / 2 in the cos form
  double quarter_real_residual = 0.0;
  double quarter_imag_residual = 0.0;
  double half_null_square = 0.0;      // max |2 T - F^2| for null F with T = cF cbarF / 2
  double quarter_null_square = 0.0;   // same with T = cF cbarF / 4
  std::int64_t samples = 0;
  /// "1/2" or "1/4" (the normalisation whose closed forms verify), "neither" otherwise.
  std::string closed_form_factor;
  std::string null_square_factor;
};

TNormalisationReport t_normalisation_report(std::int64_t samples, std::uint64_t seed);

// --- suite ----------------------------------------------------------------

struct SuiteEntry {
  std::string name;
  double tol = 0.0;
  SweepResult result;
  bool pass() const { return result.failures == 0; }
};

/// Names of every identity the suite runs, in report order.
std::vector<std::string> identity_names();

/// Residual of one named identity at one sample seed. Throws InvalidInput for an
/// unknown name.
double identity_residual(const std::string& name, std::uint64_t sample);

/// Tolerance for a named identity (before LORCAL_TOL scaling).
double identity_tolerance(const std::string& name);

std::vector<SuiteEntry> run_identity_suite(std::int64_t samples, std::uint64_t seed, Exec exec,
                                           double tol_scale = 1.0);

}  // namespace lorcal
