#include "lorcal/basis16.hpp"

#include <utility>

namespace lorcal {

namespace {

using I128 = __int128;

struct Gauss128 {
  I128 re = 0;
  I128 im = 0;
  friend Gauss128 operator*(Gauss128 a, Gauss128 b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gauss128 operator-(Gauss128 a, Gauss128 b) { return {a.re - b.re, a.im - b.im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Exact division in Z[i]; the Bareiss recurrence guarantees divisibility.
Gauss128 divide_exact(Gauss128 a, Gauss128 b) {
  const I128 n = b.re * b.re + b.im * b.im;
  const Gauss128 num = a * Gauss128{b.re, -b.im};
  return {num.re / n, num.im / n};
}

ExactMat4 chiral_exact(Axis axis, bool conjugate_sector) {
  // [[0, A^T], [A, -+ i (xA)]] with A = e_axis.
  const int k = static_cast<int>(axis);
  ExactMat4 m;
  m(0, k + 1) = {1, 0};
  m(k + 1, 0) = {1, 0};
  // (xA) has entries (r, c) = +1 / -1 on the two off-diagonal slots complementary to k.
  const int a = (k + 1) % 3;
  const int b = (k + 2) % 3;
  const GaussInt s = conjugate_sector ? kGaussI : -kGaussI;
  m(a + 1, b + 1) = s * GaussInt{1, 0};
  m(b + 1, a + 1) = s * GaussInt{-1, 0};
  return m;
}

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

BasisElement make_identity() {
  return {{BasisLabel::Kind::Identity, Axis::X, Axis::X}, ExactMat4::identity()};
}
BasisElement make_c(Axis i) { return {{BasisLabel::Kind::C, i, i}, exact_c(i)}; }
BasisElement make_cbar(Axis i) { return {{BasisLabel::Kind::CBar, i, i}, exact_cbar(i)}; }
BasisElement make_product(Axis i, Axis j) {
  return {{BasisLabel::Kind::Product, i, j}, exact_c(i) * exact_cbar(j)};
}

bool anticommute(const ExactMat4& x, const ExactMat4& y) { return (x * y + y * x).is_zero(); }
bool commute(const ExactMat4& x, const ExactMat4& y) { return (x * y - y * x).is_zero(); }

}  // namespace

ExactMat4 ExactMat4::identity() {
  ExactMat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = {1, 0};
  return m;
}

ExactMat4 operator*(const ExactMat4& x, const ExactMat4& y) {
  ExactMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      GaussInt acc;
      for (int k = 0; k < 4; ++k) acc = acc + x(r, k) * y(k, c);
      out(r, c) = acc;
    }
  return out;
}

ExactMat4 operator+(const ExactMat4& x, const ExactMat4& y) {
  ExactMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = x(r, c) + y(r, c);
  return out;
}

ExactMat4 operator-(const ExactMat4& x, const ExactMat4& y) {
  ExactMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = x(r, c) - y(r, c);
  return out;
}

ExactMat4 operator*(GaussInt s, const ExactMat4& x) {
  ExactMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = s * x(r, c);
  return out;
}

ExactMat4 ExactMat4::adjoint() const {
  ExactMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = (*this)(c, r).conj();
  return out;
}

GaussInt ExactMat4::trace() const {
  GaussInt t;
  for (int i = 0; i < 4; ++i) t = t + (*this)(i, i);
  return t;
}

Mat4C ExactMat4::to_complex() const {
  Mat4C m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = cplx(static_cast<double>(a_[r][c].re), static_cast<double>(a_[r][c].im));
  return m;
}

int exact_rank(const std::vector<ExactMat4>& mats) {
  // Fraction-free Gaussian elimination (Bareiss) over Z[i].
  const int rows = static_cast<int>(mats.size());
  constexpr int cols = 16;
  std::vector<std::array<Gauss128, cols>> a(rows);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const GaussInt g = mats[r](k / 4, k % 4);
      a[r][k] = {g.re, g.im};
    }

  int rank = 0;
  Gauss128 prev{1, 0};
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = col + 1; k < cols; ++k) {
        a[r][k] = divide_exact(a[rank][col] * a[r][k] - a[r][col] * a[rank][k], prev);
      }
      a[r][col] = {};
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::string BasisLabel::to_string() const {
  switch (kind) {
    case Kind::Identity: return "I";
    case Kind::C: return std::string("cE_") + axis_name(i);
    case Kind::CBar: return std::string("cbarE_") + axis_name(i);
    case Kind::Product: return std::string("cE_") + axis_name(i) + "*cbarE_" + axis_name(j);
  }
  return "?";
}

ExactMat4 exact_c(Axis axis) { return chiral_exact(axis, false); }
ExactMat4 exact_cbar(Axis axis) { return chiral_exact(axis, true); }

std::array<SkewOp, 6> so31_basis() {
  std::array<SkewOp, 6> out;
  for (int j = 0; j < 6; ++j) {
    Vec6 x = Vec6::Zero();
    x(j) = 1.0;
    out[j] = SkewOp::from_coords(x);
  }
  return out;
}

std::array<BasisElement, 16> basis16() {
  using enum Axis;
  return {make_identity(),    make_product(X, X), make_product(Y, Y), make_product(Z, Z),
          make_c(X),          make_cbar(X),       make_product(Y, Z), make_product(Z, Y),
          make_c(Y),          make_cbar(Y),       make_product(X, Z), make_product(Z, X),
          make_c(Z),          make_cbar(Z),       make_product(X, Y), make_product(Y, X)};
}

std::array<std::array<std::optional<TableEntry>, 16>, 16> multiplication_table() {
  const auto basis = basis16();
  const std::array<GaussInt, 4> units{GaussInt{1, 0}, GaussInt{-1, 0}, kGaussI, -kGaussI};
  std::array<std::array<std::optional<TableEntry>, 16>, 16> table;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const ExactMat4 p = basis[a].exact * basis[b].exact;
      for (int k = 0; k < 16 && !table[a][b]; ++k)
        for (const GaussInt u : units)
          if (p == u * basis[k].exact) {
            table[a][b] = TableEntry{u, k};
            break;
          }
    }
  return table;
}

MultTableReport verify_mult_table() {
  MultTableReport report;
  const std::array<Axis, 3> axes{Axis::X, Axis::Y, Axis::Z};
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  // Cyclic products: cE_a cE_b = i cE_c and cbarE_a cbarE_b = -i cbarE_c.
  for (int k = 0; k < 3; ++k) {
    const Axis a = axes[k];
    const Axis b = axes[(k + 1) % 3];
    const Axis c = axes[(k + 2) % 3];
    if (!(exact_c(a) * exact_c(b) == kGaussI * exact_c(c))) {
      fail("cE_" + std::string(axis_name(a)) + " cE_" + axis_name(b) + " != i cE_" + axis_name(c));
    }
    if (!(exact_cbar(a) * exact_cbar(b) == -kGaussI * exact_cbar(c))) {
      fail("cbarE_" + std::string(axis_name(a)) + " cbarE_" + axis_name(b) + " != -i cbarE_" +
           axis_name(c));
    }
  }
  for (const Axis a : axes)
    for (const Axis b : axes) {
      if (a != b && !anticommute(exact_c(a), exact_c(b))) {
        fail("cE_" + std::string(axis_name(a)) + ", cE_" + axis_name(b) + " do not anticommute");
      }
      if (a != b && !anticommute(exact_cbar(a), exact_cbar(b))) {
        fail("cbarE_" + std::string(axis_name(a)) + ", cbarE_" + axis_name(b) + " do not anticommute");
      }
      if (!commute(exact_c(a), exact_cbar(b))) {
        fail("cE_" + std::string(axis_name(a)) + ", cbarE_" + axis_name(b) + " do not commute");
      }
    }
  return report;
}

std::array<ExactMat4, 4> clifford_generators(bool is_signed) {
  std::array<ExactMat4, 4> g{exact_c(Axis::X), exact_c(Axis::Y), exact_c(Axis::Z) * exact_cbar(Axis::X),
                             exact_c(Axis::Z) * exact_cbar(Axis::Y)};
  if (is_signed) g[0] = kGaussI * g[0];
  return g;
}

std::optional<int> clifford_normalisation() {
  const auto alpha = clifford_generators(false);
  std::optional<int> k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const ExactMat4 ac = alpha[i] * alpha[j] + alpha[j] * alpha[i];
      if (i != j) {
        if (!ac.is_zero()) return std::nullopt;
        continue;
      }
      const GaussInt d = ac(0, 0);
      if (d.im != 0 || !(ac == d * ExactMat4::identity())) return std::nullopt;
      if (k && *k != d.re) return std::nullopt;
      k = static_cast<int>(d.re);
    }
  return k;
}

}  // namespace lorcal
