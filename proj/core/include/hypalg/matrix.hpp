#pragma once

#include "hypalg/complex_value.hpp"
#include "hypalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hypalg {

/// Dense matrix with exact rational entries. All linear algebra here
/// (rank, kernel, rref, det, solve, inverse) is exact Gaussian elimination;
/// there are no thresholds.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  const std::vector<Scalar>& data() const { return d_; }

  bool is_zero() const;
  RealMatrix transposed() const;

  friend bool operator==(const RealMatrix& a, const RealMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(const Scalar& s, const RealMatrix& a);

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> d_;
};

std::size_t rank(const RealMatrix& m);

/// Exact determinant (square matrices only).
Scalar det(const RealMatrix& m);

/// Reduced row echelon form; zero rows dropped. Canonical for a fixed column
/// order, which makes every basis this library emits deterministic.
RealMatrix rref(const RealMatrix& m);

/// Canonical kernel basis (rows of the result, RREF'd over the fixed column
/// order of m).
RealMatrix kernel_basis(const RealMatrix& m);

/// Solves A x = b; nullopt when inconsistent, the pivot solution (free
/// variables zero) otherwise.
std::optional<std::vector<Scalar>> solve(const RealMatrix& a, const std::vector<Scalar>& b);

/// Throws std::domain_error when singular.
RealMatrix inverse(const RealMatrix& m);

/// True when v is a linear combination of the rows of rref_rows (which must
/// already be in reduced row echelon form).
bool in_row_span(const RealMatrix& rref_rows, const std::vector<Scalar>& v);

/// Stacks each matrix of `mats` as one row (row-major flattening).
RealMatrix stack_flattened(const std::vector<RealMatrix>& mats);

/// Signature of the symmetric matrix g by exact congruent diagonalization:
/// counts of positive, negative and zero diagonal entries.
struct Signature {
  int positive = 0;
  int negative = 0;
  int radical = 0;
};
Signature symmetric_signature(const RealMatrix& gram);

/// Matrix over span{1,e1} entries. Embeds into RealMatrix by the fixed
/// [[a,-b],[b,a]] block convention.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ComplexValue& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const ComplexValue& at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexValue& s, const ComplexMatrix& a);

  /// Doubled real matrix, entry (a + b e1) -> [[a,-b],[b,a]].
  RealMatrix to_real() const;

  /// Row-major real flattening (re, im per entry); used for span arguments.
  std::vector<Scalar> flatten() const;

  std::vector<ComplexValue> apply(const std::vector<ComplexValue>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ComplexValue> d_;
};

}  // namespace hypalg
