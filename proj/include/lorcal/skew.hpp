#pragma once

// Skew-symmetric operators on Minkowski space in (E, B) form, the duality star,
// the chiral maps c and cbar, and the algebra they induce.

#include "lorcal/types.hpp"

#include <vector>

namespace lorcal {

/// Real element of so(3,1). Matrix form [[0, E^T], [E, xB]] where (xB) v = v x B.
struct SkewOp {
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();

  Mat4 matrix() const;
  /// Coordinates in the basis {E_x, E_y, E_z, B_x, B_y, B_z}.
  Vec6 coords() const;
  static SkewOp from_coords(const Vec6& x);
  /// Reads (E, B) off the metric-skew part of m.
  static SkewOp from_matrix(const Mat4& m);

  double norm() const { return coords().norm(); }

  SkewOp operator-() const { return {-E, -B}; }
  friend SkewOp operator+(const SkewOp& a, const SkewOp& b) { return {a.E + b.E, a.B + b.B}; }
  friend SkewOp operator-(const SkewOp& a, const SkewOp& b) { return {a.E - b.E, a.B - b.B}; }
  friend SkewOp operator*(double s, const SkewOp& a) { return {s * a.E, s * a.B}; }
  friend SkewOp operator*(const SkewOp& a, double s) { return s * a; }
};

/// Element of so(3,1) (x) C, for the complexified algebra that c and cbar act on.
struct ComplexSkewOp {
  Vec3C E = Vec3C::Zero();
  Vec3C B = Vec3C::Zero();

  Mat4C matrix() const;
  static ComplexSkewOp from(const SkewOp& f) { return {f.E.cast<cplx>(), f.B.cast<cplx>()}; }
};

enum class Chirality { C, CBar };

/// Element of cS (chirality C) or cbar S (chirality CBar), stored through the single
/// vector A = X e_t. Matrix form [[0, A^T], [A, -+ i (xA)]].
struct ChiralOp {
  Vec3C A = Vec3C::Zero();
  Chirality chirality = Chirality::C;

  Mat4C matrix() const;
  /// Reads A off column 0; the matrix must already lie in the given sector.
  static ChiralOp from_matrix(const Mat4C& m, Chirality chirality);

  ChiralOp operator-() const { return {-A, chirality}; }
  friend ChiralOp operator*(cplx s, const ChiralOp& x) { return {s * x.A, x.chirality}; }
  friend ChiralOp operator*(double s, const ChiralOp& x) { return {s * x.A, x.chirality}; }
  /// Throws MixedChirality.
  friend ChiralOp operator+(const ChiralOp& a, const ChiralOp& b);
  friend ChiralOp operator-(const ChiralOp& a, const ChiralOp& b);
};

/// lambda with lambda^2 = A.A. `value` follows the branch Re >= 0, ties broken by Im >= 0.
struct Eigenvalue {
  cplx value;
  cplx squared;
};

enum class OpClass { Zero, Null, Generic };

SkewOp star(const SkewOp& f);
ComplexSkewOp star(const ComplexSkewOp& f);

ChiralOp c_map(const SkewOp& f);
ChiralOp cbar_map(const SkewOp& f);
/// c and cbar on the complexified algebra; c(F) = F - i F*, cbar(F) = F + i F*.
ComplexSkewOp c_map(const ComplexSkewOp& f);
ComplexSkewOp cbar_map(const ComplexSkewOp& f);

ComplexSkewOp to_complex(const ChiralOp& x);
/// The unique real F whose c (or cbar) image is x.
SkewOp real_preimage(const ChiralOp& x);
/// Complex conjugate: maps c F to cbar F for real F.
ChiralOp conjugate(const ChiralOp& x);

/// Square root with Re >= 0; when Re vanishes to rounding, Im >= 0.
cplx canonical_root(cplx z);

Eigenvalue lambda(const ChiralOp& x);
cplx inner_chiral(const ChiralOp& x, const ChiralOp& y);

/// Null test |lambda^2| <= 1e-9 (1 + |A|^2).
bool is_null(const ChiralOp& x);
OpClass classify(const ChiralOp& x);
OpClass classify(const SkewOp& f);

SkewOp bracket(const SkewOp& f, const SkewOp& g);
/// [X, Y] for chiral operators: A = +2i A_X x A_Y in cS, -2i A_X x A_Y in cbar S.
/// Opposite sectors commute, so a mixed pair yields the zero operator.
ChiralOp bracket_chiral(const ChiralOp& x, const ChiralOp& y);

/// Matrix of G -> [F, G] in the {E, B} coordinates.
Mat6 ad_matrix(const SkewOp& f);
/// Matrix of A -> A_{[X, Y]} for Y in the sector of X.
Mat3C ad_chiral(const ChiralOp& x);

struct NullDirection {
  Vec4 s;               // real null vector normalised to s_t = 1
  cplx chiral_eigenvalue;  // c F s = chiral_eigenvalue * s
};

/// Real null eigendirections: two for generic F (eigenvalues +lambda, -lambda of cF),
/// one for null F. Throws ZeroOperator for F = 0.
std::vector<NullDirection> null_eigenvectors(const SkewOp& f);

}  // namespace lorcal
