#pragma once

// The E/B basis of so(3,1) and a Hermitian basis of M_4(C) built from the chiral
// images of E_x, E_y, E_z. Everything here has Gaussian-integer entries, so the
// multiplication laws are checked with exact integer arithmetic.

#include "lorcal/skew.hpp"
#include "lorcal/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lorcal {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt conj() const { return {re, -im}; }
  friend bool operator==(GaussInt, GaussInt) = default;
};

inline constexpr GaussInt kGaussI{0, 1};

class ExactMat4 {
 public:
  static ExactMat4 zero() { return {}; }
  static ExactMat4 identity();

  GaussInt& operator()(int r, int c) { return a_[r][c]; }
  GaussInt operator()(int r, int c) const { return a_[r][c]; }

  friend ExactMat4 operator*(const ExactMat4& x, const ExactMat4& y);
  friend ExactMat4 operator+(const ExactMat4& x, const ExactMat4& y);
  friend ExactMat4 operator-(const ExactMat4& x, const ExactMat4& y);
  friend ExactMat4 operator*(GaussInt s, const ExactMat4& x);
  friend bool operator==(const ExactMat4&, const ExactMat4&) = default;

  ExactMat4 adjoint() const;
  GaussInt trace() const;
  bool is_zero() const { return *this == ExactMat4{}; }
  Mat4C to_complex() const;

 private:
  std::array<std::array<GaussInt, 4>, 4> a_{};
};

/// Exact rank over Q(i) of the given matrices flattened row-major into rows.
int exact_rank(const std::vector<ExactMat4>& mats);

enum class Axis { X = 0, Y = 1, Z = 2 };

/// I, cE_i, cbar E_i, or the product cE_i * cbar E_j.
struct BasisLabel {
  enum class Kind { Identity, C, CBar, Product } kind = Kind::Identity;
  Axis i = Axis::X;
  Axis j = Axis::X;

  std::string to_string() const;
};

struct BasisElement {
  BasisLabel label;
  ExactMat4 exact;
  Mat4C matrix() const { return exact.to_complex(); }
};

/// Exact chiral images c E_axis and cbar E_axis.
ExactMat4 exact_c(Axis axis);
ExactMat4 exact_cbar(Axis axis);

/// {E_x, E_y, E_z, B_x, B_y, B_z}.
std::array<SkewOp, 6> so31_basis();

/// The sixteen products in table order (row-major):
///   I,    cEx cbEx, cEy cbEy, cEz cbEz
///   cEx,  cbEx,     cEy cbEz, cEz cbEy
///   cEy,  cbEy,     cEx cbEz, cEz cbEx
///   cEz,  cbEz,     cEx cbEy, cEy cbEx
std::array<BasisElement, 16> basis16();

/// x * y = unit * basis16()[index], with unit in {1, -1, i, -i}.
struct TableEntry {
  GaussInt unit;
  int index = 0;
};

/// Full 16x16 multiplication table; nullopt for a product that is not a unit
/// multiple of a basis element (never happens for this basis).
std::array<std::array<std::optional<TableEntry>, 16>, 16> multiplication_table();

struct MultTableReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Product, conjugate-product, anticommutation and cross-sector commutation laws
/// among cE_i and cbar E_j, each checked as an exact matrix identity.
MultTableReport verify_mult_table();

/// Unsigned: alpha_0..3 with alpha_i alpha_j + alpha_j alpha_i = 2 delta_ij I.
/// Signed: gamma_0 = i alpha_0, gamma_k = alpha_k, anticommutator 2 <e_i, e_j> I.
std::array<ExactMat4, 4> clifford_generators(bool is_signed);

/// Normalisation k for which alpha_i alpha_j + alpha_j alpha_i = k delta_ij I holds
/// exactly; nullopt if no single k works.
std::optional<int> clifford_normalisation();

}  // namespace lorcal
