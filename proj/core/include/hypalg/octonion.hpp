#pragma once

#include "hypalg/complex_value.hpp"
#include "hypalg/scalar.hpp"

#include <array>
#include <cstdint>

namespace hypalg {

/// The seven oriented quaternionic lines of the octonion algebra:
/// eps_{mnp} = +1 exactly on these cycles.
inline constexpr std::array<std::array<int, 3>, 7> kOctonionCycles = {
    {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

/// Signed basis-product table for {1, e1, ..., e7}:
///   e_i e_j = sign[i][j] * e_{index[i][j]}
/// Generated from the seven cycles; a test re-derives it independently.
struct OctBasisTable {
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> index{};
};

consteval OctBasisTable make_oct_basis_table() {
  OctBasisTable t;
  for (int i = 0; i < 8; ++i) {
    t.sign[0][i] = 1;
    t.index[0][i] = static_cast<std::uint8_t>(i);
    t.sign[i][0] = 1;
    t.index[i][0] = static_cast<std::uint8_t>(i);
  }
  for (int i = 1; i < 8; ++i) {
    t.sign[i][i] = -1;
    t.index[i][i] = 0;
  }
  for (const auto& c : kOctonionCycles) {
    const int perms[3][3] = {{c[0], c[1], c[2]}, {c[1], c[2], c[0]}, {c[2], c[0], c[1]}};
    for (const auto& p : perms) {
      t.sign[p[0]][p[1]] = 1;
      t.index[p[0]][p[1]] = static_cast<std::uint8_t>(p[2]);
      t.sign[p[1]][p[0]] = -1;
      t.index[p[1]][p[0]] = static_cast<std::uint8_t>(p[2]);
    }
  }
  return t;
}

inline constexpr OctBasisTable kOctTable = make_oct_basis_table();

/// eps3[m][n][p] (indices 1..7), derived from the basis table, and
/// eps4[m][n][p][s] derived from exhaustive basis associators via
/// {e_m, e_n, e_p} = 2 eps4[m][n][p][s] e_s. Tests assert both against the
/// published cycle lists, cross-validating the product table.
struct StructureConstants {
  std::array<std::array<std::array<std::int8_t, 8>, 8>, 8> eps3{};
  std::array<std::array<std::array<std::array<std::int8_t, 8>, 8>, 8>, 8> eps4{};
};

const StructureConstants& structure_constants();

/// Octonion r0 + r1 e1 + ... + r7 e7, exact rational coefficients.
/// Multiplication is NOT associative; helpers never reassociate.
struct Octonion {
  std::array<Scalar, 8> c{};

  Octonion() = default;
  static Octonion unit(int i);
  static Octonion from_scalar(Scalar s);

  bool is_zero() const;

  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a);
  friend Octonion operator*(const Scalar& s, const Octonion& a);
  friend Octonion operator*(const Octonion& a, const Octonion& b) { return mul(a, b); }

  static Octonion mul(const Octonion& a, const Octonion& b);
};

/// o† = r0 - sum r_m e_m.
Octonion conjugate(const Octonion& o);

/// N²(o) = sum r_i².
Scalar norm2(const Octonion& o);

/// o† / N²(o). Throws std::domain_error for o = 0.
Octonion inverse(const Octonion& o);

/// {x,y,z} = (xy)z - x(yz).
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// (o - e1 o e1)/2: the span{1,e1} component r0 + r1 e1. Well defined, since
/// e1(o e1) = (e1 o)e1 by flexibility.
ComplexValue complex_projection(const Octonion& o);

}  // namespace hypalg
