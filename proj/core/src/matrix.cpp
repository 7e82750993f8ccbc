#include "hypalg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hypalg {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RealMatrix::is_zero() const {
  for (const auto& v : d_) {
    if (v != 0) return false;
  }
  return true;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix add: shape mismatch");
  }
  RealMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = a.d_[i] + b.d_[i];
  return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sub: shape mismatch");
  }
  RealMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = a.d_[i] - b.d_[i];
  return out;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
  RealMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& arc = a.at(r, k);
      if (arc == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b.at(k, c) == 0) continue;
        out.at(r, c) += arc * b.at(k, c);
      }
    }
  }
  return out;
}

RealMatrix operator*(const Scalar& s, const RealMatrix& a) {
  RealMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = s * a.d_[i];
  return out;
}

std::vector<Scalar> RealMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) == 0 || v[c] == 0) continue;
      out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

namespace {

// In-place forward elimination to reduced row echelon form; returns pivot
// columns. Row pivoting only (first nonzero), so column order is preserved
// and the result is canonical for a fixed column order.
std::vector<std::size_t> rref_in_place(RealMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
    }
    const Scalar inv = Scalar(1) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Scalar f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RealMatrix& m) {
  RealMatrix work = m;
  return rref_in_place(work).size();
}

Scalar det(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  RealMatrix work = m;
  const std::size_t n = work.rows();
  Scalar result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work.at(col, c), work.at(pivot, c));
      result = -result;
    }
    result *= work.at(col, col);
    const Scalar inv = Scalar(1) / work.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col) == 0) continue;
      const Scalar f = work.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) work.at(r, c) -= f * work.at(col, c);
    }
  }
  return result;
}

RealMatrix rref(const RealMatrix& m) {
  RealMatrix work = m;
  const std::size_t r = rref_in_place(work).size();
  RealMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(i, c) = work.at(i, c);
  }
  return out;
}

RealMatrix kernel_basis(const RealMatrix& m) {
  RealMatrix work = m;
  const std::vector<std::size_t> pivots = rref_in_place(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  RealMatrix ker(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    ker.at(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      ker.at(k, pivots[i]) = -work.at(i, f);
    }
  }
  // Canonicalize the kernel rows themselves.
  return rref(ker);
}

std::optional<std::vector<Scalar>> solve(const RealMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RealMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  }
  std::vector<Scalar> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = aug.at(i, a.cols());
  }
  return x;
}

RealMatrix inverse(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RealMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() != n - 1) {
    throw std::domain_error("inverse: singular matrix");
  }
  RealMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  }
  return out;
}

bool in_row_span(const RealMatrix& rref_rows, const std::vector<Scalar>& v) {
  if (v.size() != rref_rows.cols()) throw std::invalid_argument("in_row_span: shape mismatch");
  std::vector<Scalar> rem = v;
  for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < rref_rows.cols() && rref_rows.at(r, lead) == 0) ++lead;
    if (lead == rref_rows.cols()) continue;
    if (rem[lead] == 0) continue;
    const Scalar f = rem[lead];
    for (std::size_t c = lead; c < rref_rows.cols(); ++c) {
      if (rref_rows.at(r, c) == 0) continue;
      rem[c] -= f * rref_rows.at(r, c);
    }
  }
  for (const auto& s : rem) {
    if (s != 0) return false;
  }
  return true;
}

RealMatrix stack_flattened(const std::vector<RealMatrix>& mats) {
  if (mats.empty()) return {};
  const std::size_t w = mats.front().rows() * mats.front().cols();
  RealMatrix out(mats.size(), w);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() * mats[i].cols() != w) {
      throw std::invalid_argument("stack_flattened: inconsistent shapes");
    }
    for (std::size_t j = 0; j < w; ++j) out.at(i, j) = mats[i].data()[j];
  }
  return out;
}

Signature symmetric_signature(const RealMatrix& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("signature: matrix not square");
  RealMatrix g = gram;
  const std::size_t n = g.rows();
  Signature sig;
  // Congruent diagonalization: simultaneous row and column operations keep
  // the form's equivalence class; signs of the diagonal are the signature.
  for (std::size_t k = 0; k < n; ++k) {
    if (g.at(k, k) == 0) {
      // Find a usable pivot below/right and fold it into the diagonal.
      std::size_t swap_row = k;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (g.at(r, r) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(g.at(k, c), g.at(swap_row, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(g.at(r, k), g.at(r, swap_row));
      } else {
        std::size_t j = n;
        for (std::size_t c = k + 1; c < n; ++c) {
          if (g.at(k, c) != 0) {
            j = c;
            break;
          }
        }
        if (j == n) {
          ++sig.radical;
          continue;
        }
        // Row/col k += row/col j turns the off-diagonal pair into a diagonal.
        for (std::size_t c = 0; c < n; ++c) g.at(k, c) += g.at(j, c);
        for (std::size_t r = 0; r < n; ++r) g.at(r, k) += g.at(r, j);
      }
    }
    const Scalar pivot = g.at(k, k);
    if (pivot > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (g.at(r, k) == 0) continue;
      const Scalar f = g.at(r, k) / pivot;
      for (std::size_t c = 0; c < n; ++c) g.at(r, c) -= f * g.at(k, c);
      for (std::size_t c = 0; c < n; ++c) g.at(c, r) -= f * g.at(c, k);
    }
  }
  return sig;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ComplexValue{1, 0};
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("complex matrix add: shape mismatch");
  }
  ComplexMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = a.d_[i] + b.d_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("complex matrix mul: shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexValue& s, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.d_.size(); ++i) out.d_[i] = s * a.d_[i];
  return out;
}

RealMatrix ComplexMatrix::to_real() const {
  RealMatrix out(2 * rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const ComplexValue& v = at(r, c);
      out.at(2 * r, 2 * c) = v.re;
      out.at(2 * r, 2 * c + 1) = -v.im;
      out.at(2 * r + 1, 2 * c) = v.im;
      out.at(2 * r + 1, 2 * c + 1) = v.re;
    }
  }
  return out;
}

std::vector<Scalar> ComplexMatrix::flatten() const {
  std::vector<Scalar> out;
  out.reserve(d_.size() * 2);
  for (const auto& v : d_) {
    out.push_back(v.re);
    out.push_back(v.im);
  }
  return out;
}

std::vector<ComplexValue> ComplexMatrix::apply(const std::vector<ComplexValue>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("complex matrix apply: shape mismatch");
  std::vector<ComplexValue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + at(r, c) * v[c];
  }
  return out;
}

}  // namespace hypalg
