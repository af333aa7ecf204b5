#pragma once

// The field of an accelerated point charge on the future light cone, in Gaussian
// units with c = 1, as a skew operator: a Coulomb boost plus a null radiative part
// sharing the null eigenvector u + w.

#include "lorcal/identities.hpp"
#include "lorcal/minkowski.hpp"
#include "lorcal/skew.hpp"
#include "lorcal/sweep.hpp"

#include <cstdint>
#include <vector>

namespace lorcal {

struct ChargeState {
  double q = 1.0;  // charge
  double r = 1.0;  // retarded distance, > 0
  Observer u = Observer::rest();
  Vec3 w = Vec3::UnitZ();  // unit direction in the rest space of u
  Vec3 a = Vec3::Zero();   // acceleration in the rest space of u
};

struct FieldDecomposition {
  SkewOp F_a;     // E = q (w / r^2 - a_perp / r), B = (q / r) a_perp x w
  SkewOp E_coul;  // (q / r^2) E_w
  SkewOp N_a;     // E = -a_perp, B = a_perp x w
  Vec4C shared_eigenvector;  // u + w
  Vec3 a_perp;
};

/// Throws InvalidState for r <= 0, non-unit w or non-finite input, and
/// UnsupportedObserver unless u = e0.
FieldDecomposition field_at(const ChargeState& s);

struct FieldConjugationCheck {
  /// F_a against e^{-r N_a} E_coul e^{r N_a}.
  IdentityCheck conjugation;
  /// e^{-(r/2) cN_a} cE_coul e^{(r/2) cN_a} against cE_coul + (q/r) cN_a.
  IdentityCheck chiral_half_step;
  /// Eigenvalue of cF_a on u + w, expected q / r^2.
  cplx shared_eigenvalue;
  /// lambda^2 of cF_a, expected q^2 / r^4.
  cplx lambda_sq;
  double eigenvalue_residual = 0.0;  // max of |shared - q/r^2| and |lambda^2 - q^2/r^4|
  /// max |<cE_coul, cN_a>|, |cN_a (u+w)|, |cE_w (u+w) - (u+w)|
  double eigenvector_residual = 0.0;
  /// Tolerance scale for `conjugation`: 1 + |F_a|.
  double field_scale = 1.0;
};

FieldConjugationCheck check_field_conjugation(const ChargeState& s);

/// q in [-2, 2], r log-uniform in [0.1, 10], w uniform on the sphere, |a| <= 3.
ChargeState random_charge_state(std::uint64_t seed);

struct ConeSample {
  double r = 0.0;
  Vec3 w = Vec3::Zero();
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();
  cplx lambda_sq;
  OpClass cls = OpClass::Zero;
};

/// n points spread over the unit sphere (Fibonacci lattice).
std::vector<Vec3> sphere_directions(int n);

/// One row per (r, w) pair, r-major. Throws InvalidState if any r <= 0.
std::vector<ConeSample> sample_cone(double q, const Vec3& a, const std::vector<double>& r_grid,
                                    const std::vector<Vec3>& directions, Exec exec = Exec::Parallel);

}  // namespace lorcal
