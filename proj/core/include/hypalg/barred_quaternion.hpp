#pragma once

#include "hypalg/quaternion.hpp"

#include <array>

namespace hypalg {

/// Real linear quaternionic operator q0 + q1|e1 + q2|e2 + q3|e3 acting on
/// quaternions as q -> q0 q + q1 q e1 + q2 q e2 + q3 q e3 (16 real
/// parameters). c[m] is the coefficient of the |e_m slot, c[0] the unbarred
/// left factor.
///
/// Composition convention: compose(A, B) applies B first, so that
/// apply(compose(A, B), q) = apply(A, apply(B, q)). This matches the product
/// formula Q_r P_r with Q_r = A, P_r = B.
struct BarredQuaternion {
  std::array<Quaternion, 4> c{};

  BarredQuaternion() = default;

  static BarredQuaternion identity();
  /// Plain left multiplication by q (a "quaternionic linear" operator).
  static BarredQuaternion from_left(const Quaternion& q);
  static BarredQuaternion from_scalar(const Scalar& s);
  /// 1|e_m (right multiplication by e_m), m in 1..3.
  static BarredQuaternion bar_unit(int m);
  /// q|e_m, m in 0..3 (m = 0 means the unbarred slot).
  static BarredQuaternion term(const Quaternion& q, int m);

  bool is_zero() const;

  friend bool operator==(const BarredQuaternion& a, const BarredQuaternion& b) {
    return a.c == b.c;
  }
  friend BarredQuaternion operator+(const BarredQuaternion& a, const BarredQuaternion& b);
  friend BarredQuaternion operator-(const BarredQuaternion& a, const BarredQuaternion& b);
  friend BarredQuaternion operator-(const BarredQuaternion& a);
  friend BarredQuaternion operator*(const Scalar& s, const BarredQuaternion& a);
};

Quaternion apply(const BarredQuaternion& op, const Quaternion& q);

BarredQuaternion compose(const BarredQuaternion& a, const BarredQuaternion& b);

/// Flips the sign of left and right imaginary units: (AB)† = B†A†.
BarredQuaternion dagger(const BarredQuaternion& op);

/// Q_r^t = q0^t + q1^t|e1 - q2^t|e2 + q3^t|e3: (AB)^t = B^t A^t.
BarredQuaternion btranspose(const BarredQuaternion& op);

/// Complex linear predicate: q2 = q3 = 0.
bool is_complex_linear(const BarredQuaternion& op);

/// Tr = Re q0 + e1 Re q1. Cyclic on complex linear operators; throws
/// std::domain_error if the operand is not complex linear.
ComplexValue complex_trace(const BarredQuaternion& op);

/// tr = Re q0. Cyclic on all real linear operators.
Scalar real_trace(const BarredQuaternion& op);

/// g = -(1 + e1|e1 + e2|e2 + e3|e3)/2; apply(g, q) = q† and its 4x4 image is
/// diag(1,-1,-1,-1).
BarredQuaternion g_operator();

namespace detail {
/// Re q0 + e1 Re q1 evaluated on an arbitrary Q_r, without the complex-linear
/// check. Only used to exhibit the non-cyclicity of the complex trace on Q_r;
/// not a trace.
ComplexValue complex_trace_unchecked(const BarredQuaternion& op);
}  // namespace detail

}  // namespace hypalg
