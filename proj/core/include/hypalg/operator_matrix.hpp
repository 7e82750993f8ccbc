#pragma once

#include "hypalg/barred_quaternion.hpp"

#include <vector>

namespace hypalg {

/// n x n matrix of barred quaternionic operators; the carrier for group
/// constraints. Dagger and transpose act entrywise with index swap:
/// (M†)_rs = (M_sr)†, (M^t)_rs = (M_sr)^t, so (MN)^t = N^t M^t holds for
/// noncommuting entries.
struct OperatorMatrix {
  int n = 0;
  std::vector<BarredQuaternion> e;

  OperatorMatrix() = default;
  explicit OperatorMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_) {}

  static OperatorMatrix identity(int n);

  BarredQuaternion& at(int r, int s) { return e[static_cast<std::size_t>(r) * n + s]; }
  const BarredQuaternion& at(int r, int s) const {
    return e[static_cast<std::size_t>(r) * n + s];
  }

  bool is_zero() const;

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.n == b.n && a.e == b.e;
  }
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const Scalar& s, const OperatorMatrix& a);
};

/// Matrix product with operator composition in each entry (b applies first).
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix dagger(const OperatorMatrix& m);
OperatorMatrix btranspose(const OperatorMatrix& m);

/// Naive transpose (M^t)_rs = M_sr with no entry conjugation. Fails to
/// antihomomorphise over quaternions; kept as the counterexample surface.
OperatorMatrix naive_transpose(const OperatorMatrix& m);

/// Entrywise-diagonal scalar-operator matrix diag(op, ..., op).
OperatorMatrix diag_operator(const BarredQuaternion& op, int n);

std::vector<Quaternion> apply(const OperatorMatrix& m, const std::vector<Quaternion>& state);

/// Fixed parameter ordering used everywhere a basis is canonicalized:
/// entry (row-major), then barred slot, then quaternion component -> 16 n²
/// scalars.
std::vector<Scalar> flatten(const OperatorMatrix& m);

}  // namespace hypalg
