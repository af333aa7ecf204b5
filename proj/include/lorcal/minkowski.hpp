#pragma once

// Complexified Minkowski space R^{3,1} (x) C with the -+++ form, observers and
// the two families of totally null complex 2-planes.

#include "lorcal/types.hpp"

namespace lorcal {

/// Unit vector e_i of the fixed orthonormal frame, i in {0, 1, 2, 3}.
Vec4C basis_vector(int i);

/// Complex-bilinear extension of the -+++ inner product.
cplx inner_c(const Vec4C& v, const Vec4C& w);

/// <<v, w>> = <v, conj(w)>_C.
cplx inner_hermitian(const Vec4C& v, const Vec4C& w);

/// Future-pointing unit timelike vector.
class Observer {
 public:
  /// Throws InvalidObserver unless <u,u> = -1 (to 1e-10 relative) and u_t > 0.
  explicit Observer(const Vec4& u);

  static Observer rest() { return Observer(Vec4(1.0, 0.0, 0.0, 0.0)); }
  /// Observer moving with rapidity |phi| along phi.
  static Observer boosted(const Vec3& rapidity);

  const Vec4& vector() const noexcept { return u_; }
  Vec4C complex_vector() const { return u_.cast<cplx>(); }

 private:
  Vec4 u_;
};

/// Cross product in the rest space of u, oriented so that e1 x e2 = e3.
/// Only u = e0 is supported; a and b must have zero time component.
Vec4C rest_cross(const Observer& u, const Vec4C& a, const Vec4C& b);

enum class NullPlaneType { Alpha, Beta, NotTotallyNull };

/// Classifies span{s, t}. Alpha planes have self-dual bivector s^t (the plane
/// spanned by e0+e1 and e2+i e3 is Alpha); Beta planes are anti-self-dual.
NullPlaneType classify_null_plane(const Vec4C& s, const Vec4C& t);

}  // namespace lorcal
