#pragma once

#include "hypalg/complex_value.hpp"
#include "hypalg/scalar.hpp"

#include <array>
#include <cstdint>

namespace hypalg {

/// Signed basis-product table for {1, e1, e2, e3}:
///   e_i e_j = sign[i][j] * e_{index[i][j]}
/// Generated from e1e2 = e3 = -e2e1 and cyclic permutations, not typed out
/// per component; the octonion table is generated the same way.
struct QuatBasisTable {
  std::array<std::array<std::int8_t, 4>, 4> sign{};
  std::array<std::array<std::uint8_t, 4>, 4> index{};
};

consteval QuatBasisTable make_quat_basis_table() {
  QuatBasisTable t;
  for (int i = 0; i < 4; ++i) {
    t.sign[0][i] = 1;
    t.index[0][i] = static_cast<std::uint8_t>(i);
    t.sign[i][0] = 1;
    t.index[i][0] = static_cast<std::uint8_t>(i);
  }
  for (int i = 1; i < 4; ++i) {
    t.sign[i][i] = -1;
    t.index[i][i] = 0;
  }
  constexpr int cycles[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : cycles) {
    t.sign[c[0]][c[1]] = 1;
    t.index[c[0]][c[1]] = static_cast<std::uint8_t>(c[2]);
    t.sign[c[1]][c[0]] = -1;
    t.index[c[1]][c[0]] = static_cast<std::uint8_t>(c[2]);
  }
  return t;
}

inline constexpr QuatBasisTable kQuatTable = make_quat_basis_table();

/// Real quaternion w + x e1 + y e2 + z e3 with exact rational coefficients.
struct Quaternion {
  Scalar w{0}, x{0}, y{0}, z{0};

  Quaternion() = default;
  Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  /// Basis unit: 0 -> 1, 1..3 -> e1..e3.
  static Quaternion unit(int i);
  static Quaternion from_scalar(Scalar s) { return {std::move(s), 0, 0, 0}; }

  const Scalar& comp(int i) const;
  Scalar& comp(int i);

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  bool is_real() const { return x == 0 && y == 0 && z == 0; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Scalar& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

  static Quaternion mul(const Quaternion& a, const Quaternion& b);
};

/// q† = w - x e1 - y e2 - z e3.
Quaternion conjugate(const Quaternion& q);

/// q^t = w + x e1 - y e2 + z e3; reverses products: (qp)^t = p^t q^t.
/// Equals -e2 q† e2.
Quaternion transpose(const Quaternion& q);

/// q* = w - x e1 - y e2 + z e3; a homomorphism: (qp)* = q* p*.
Quaternion star(const Quaternion& q);

/// N(q) = w² + x² + y² + z² = q†q = qq†.
Scalar norm2(const Quaternion& q);

/// q† / N(q). Throws std::domain_error for q = 0.
Quaternion inverse(const Quaternion& q);

/// The six sign-pattern conjugations beyond q†, numbered in the order they
/// are listed: 1..3 flip only e_k (closed form -e_k q† e_k), 4..6 fix e_{k-3}
/// and flip the other two units (closed form -e_{k-3} q e_{k-3}). The pairing
/// of patterns with closed forms is derived by expansion and pinned by tests.
Quaternion six_conjugation(const Quaternion& q, int selector);

/// -e_axis q† e_axis (dagger_form) or -e_axis q e_axis, axis in 1..3.
Quaternion sandwich_conjugation(const Quaternion& q, int axis, bool dagger_form);

/// (q - e1 q e1)/2 = w + x e1.
ComplexValue complex_projection(const Quaternion& q);

/// The real component w.
Scalar real_projection(const Quaternion& q);

Quaternion embed(const ComplexValue& c);

}  // namespace hypalg
