#pragma once

// Closed-form exponential on the chiral sectors and on so(3,1), the principal
// logarithm on SO+(3,1), the differential of exp by three independent routes, and
// the singular set of exp.

#include "lorcal/skew.hpp"
#include "lorcal/types.hpp"

#include <array>
#include <span>

namespace lorcal {

/// A 4x4 real matrix expected to be proper orthochronous Lorentz.
using LorentzMat = Mat4;

struct LorentzDefect {
  double isometry = 0.0;     // max |M^T eta M - eta|
  double determinant = 0.0;  // |det M - 1|
  bool orthochronous = false;
};

LorentzDefect lorentz_defect(const Mat4& m);

/// e^X = cosh(lambda) I + sinh(lambda)/lambda X.
Mat4C exp_chiral(const ChiralOp& x);

/// e^F = e^{cF/2} e^{cbarF/2}.
LorentzMat exp_real(const SkewOp& f);

/// T_F = (1/2) cF cbarF; real-valued and symmetric with respect to the metric.
Mat4C t_operator(const SkewOp& f);

/// Principal logarithm: the F with |Im lambda_cF| < pi and exp_real(F) = L.
/// Throws NotLorentz, NotOrthochronous, or BranchAmbiguous when L has an
/// eigenvalue on the negative real axis (Im lambda = +-pi).
SkewOp log_lorentz(const LorentzMat& l);

enum class DexpRoute { Helgason, ClosedForm, FiniteDifference };

struct DexpResult {
  Mat4 value;
  DexpRoute route;
};

/// d/dt e^{F + tG} at t = 0.
DexpResult dexp(const SkewOp& f, const SkewOp& g, DexpRoute route);

/// d/dt e^{X + tY} at t = 0 for X, Y in the same sector. Throws MixedChirality.
Mat4C dexp_chiral(const ChiralOp& x, const ChiralOp& y);

/// (1 - e^{-ad F}) / ad F as a 6x6 matrix; eigen-decomposition when the eigenvector
/// matrix has condition <= 1e8, otherwise the power series.
Mat6 helgason_factor(const SkewOp& f);

/// Matrix of G -> e^{-F} d/dt e^{F+tG} in {E, B} coordinates.
Mat6 dexp_pullback(const SkewOp& f);

struct SingularityReport {
  bool is_singular = false;
  int n = 0;  // lambda_cF = 2 pi n i when singular
  cplx lambda;
  /// Real G with <cF, cG> = 0; exactly the kernel of G -> d e^F when singular.
  std::array<SkewOp, 4> kernel_basis;
  /// F and F*, which commute with F.
  std::array<SkewOp, 2> complement_basis;
  int derivative_rank = 6;
};

/// Throws ZeroOperator for F = 0.
SingularityReport singularity(const SkewOp& f);

/// e^{F1} ... e^{Fn}; n >= 1.
LorentzMat compose_map(std::span<const SkewOp> fs);

/// 6 x 6n Jacobian of the composition pulled back to so(3,1) by R^{-1}.
Eigen::MatrixXd compose_jacobian(std::span<const SkewOp> fs);
int compose_jacobian_rank(std::span<const SkewOp> fs, double rel_tol = 1e-8);

/// d lambda / dt of lambda_{cF + t cG} at t = 0, i.e. <cF, cG> / lambda_cF.
/// Throws NullBase when cF is null.
cplx lambda_path_derivative(const SkewOp& f, const SkewOp& g);

/// d (lambda^2) / dt of cF + t cG at parameter t: 2 <cF, cG> + 2 t lambda_cG^2.
cplx lambda_sq_path_derivative(const SkewOp& f, const SkewOp& g, double t);

}  // namespace lorcal
