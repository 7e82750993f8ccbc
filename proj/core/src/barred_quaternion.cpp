#include "hypalg/barred_quaternion.hpp"

#include <stdexcept>

namespace hypalg {

BarredQuaternion BarredQuaternion::identity() { return from_scalar(Scalar(1)); }

BarredQuaternion BarredQuaternion::from_left(const Quaternion& q) {
  BarredQuaternion b;
  b.c[0] = q;
  return b;
}

BarredQuaternion BarredQuaternion::from_scalar(const Scalar& s) {
  return from_left(Quaternion::from_scalar(s));
}

BarredQuaternion BarredQuaternion::bar_unit(int m) {
  if (m < 1 || m > 3) throw std::invalid_argument("bar_unit: index must be 1..3");
  return term(Quaternion::from_scalar(Scalar(1)), m);
}

BarredQuaternion BarredQuaternion::term(const Quaternion& q, int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("term: slot must be 0..3");
  BarredQuaternion b;
  b.c[static_cast<std::size_t>(m)] = q;
  return b;
}

bool BarredQuaternion::is_zero() const {
  for (const auto& q : c) {
    if (!q.is_zero()) return false;
  }
  return true;
}

BarredQuaternion operator+(const BarredQuaternion& a, const BarredQuaternion& b) {
  BarredQuaternion out;
  for (int i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

BarredQuaternion operator-(const BarredQuaternion& a, const BarredQuaternion& b) {
  BarredQuaternion out;
  for (int i = 0; i < 4; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

BarredQuaternion operator-(const BarredQuaternion& a) {
  BarredQuaternion out;
  for (int i = 0; i < 4; ++i) out.c[i] = -a.c[i];
  return out;
}

BarredQuaternion operator*(const Scalar& s, const BarredQuaternion& a) {
  BarredQuaternion out;
  for (int i = 0; i < 4; ++i) out.c[i] = s * a.c[i];
  return out;
}

Quaternion apply(const BarredQuaternion& op, const Quaternion& q) {
  Quaternion out = op.c[0] * q;
  for (int m = 1; m < 4; ++m) {
    if (op.c[m].is_zero()) continue;
    out = out + op.c[m] * q * Quaternion::unit(m);
  }
  return out;
}

BarredQuaternion compose(const BarredQuaternion& a, const BarredQuaternion& b) {
  // a_i (b_j x e_j) e_i = (a_i b_j) x (e_j e_i): the barred slots multiply by
  // the right-unit product e_j e_i, the left coefficients in operator order.
  BarredQuaternion out;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c[j].is_zero()) continue;
      Quaternion coeff = a.c[i] * b.c[j];
      const int k = kQuatTable.index[j][i];
      if (kQuatTable.sign[j][i] < 0) coeff = -coeff;
      out.c[k] = out.c[k] + coeff;
    }
  }
  return out;
}

BarredQuaternion dagger(const BarredQuaternion& op) {
  BarredQuaternion out;
  out.c[0] = conjugate(op.c[0]);
  for (int m = 1; m < 4; ++m) out.c[m] = -conjugate(op.c[m]);
  return out;
}

BarredQuaternion btranspose(const BarredQuaternion& op) {
  BarredQuaternion out;
  out.c[0] = transpose(op.c[0]);
  out.c[1] = transpose(op.c[1]);
  out.c[2] = -transpose(op.c[2]);
  out.c[3] = transpose(op.c[3]);
  return out;
}

bool is_complex_linear(const BarredQuaternion& op) {
  return op.c[2].is_zero() && op.c[3].is_zero();
}

ComplexValue complex_trace(const BarredQuaternion& op) {
  if (!is_complex_linear(op)) {
    throw std::domain_error("complex_trace: operand is not complex linear (q2 = q3 = 0)");
  }
  return detail::complex_trace_unchecked(op);
}

Scalar real_trace(const BarredQuaternion& op) { return op.c[0].w; }

BarredQuaternion g_operator() {
  BarredQuaternion g = BarredQuaternion::identity();
  for (int m = 1; m < 4; ++m) {
    g = g + BarredQuaternion::term(Quaternion::unit(m), m);
  }
  return scalar(-1, 2) * g;
}

namespace detail {
ComplexValue complex_trace_unchecked(const BarredQuaternion& op) {
  return {op.c[0].w, op.c[1].w};
}
}  // namespace detail

}  // namespace hypalg
