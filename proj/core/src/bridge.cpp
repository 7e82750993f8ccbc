#include "hypalg/bridge.hpp"

#include <array>
#include <stdexcept>

namespace hypalg {

namespace {

std::vector<Scalar> vec(const Octonion& o) {
  return std::vector<Scalar>(o.c.begin(), o.c.end());
}

Octonion octonion_from_vec(const std::vector<Scalar>& v) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = v[static_cast<std::size_t>(i)];
  return o;
}

RealMatrix make_quat_left(int m) {
  RealMatrix out(4, 4);
  for (int j = 0; j < 4; ++j) {
    out.at(kQuatTable.index[m][j], j) = kQuatTable.sign[m][j];
  }
  return out;
}

RealMatrix make_quat_right(int m) {
  RealMatrix out(4, 4);
  for (int j = 0; j < 4; ++j) {
    out.at(kQuatTable.index[j][m], j) = kQuatTable.sign[j][m];
  }
  return out;
}

RealMatrix make_oct_left(int m) {
  RealMatrix out(8, 8);
  for (int j = 0; j < 8; ++j) {
    out.at(kOctTable.index[m][j], j) = kOctTable.sign[m][j];
  }
  return out;
}

RealMatrix make_oct_right(int m) {
  RealMatrix out(8, 8);
  for (int j = 0; j < 8; ++j) {
    out.at(kOctTable.index[j][m], j) = kOctTable.sign[j][m];
  }
  return out;
}

/// L_o for an arbitrary octonion left factor.
RealMatrix oct_left_mult(const Octonion& o) {
  RealMatrix out(8, 8);
  for (int i = 0; i < 8; ++i) {
    if (o.c[i] == 0) continue;
    out = out + o.c[i] * oct_left_unit(i);
  }
  return out;
}

RealMatrix quat_left_mult(const Quaternion& q) {
  RealMatrix out(4, 4);
  for (int i = 0; i < 4; ++i) {
    if (q.comp(i) == 0) continue;
    out = out + q.comp(i) * quat_left_unit(i);
  }
  return out;
}

/// Columns are the flattened 64 left-barred basis images; inverting it once
/// makes every matrix -> left-barred solve a single multiplication. The
/// population is idempotent, so concurrent first use is benign.
const RealMatrix& basis_matrix_inverse() {
  static const RealMatrix inv = [] {
    const auto& basis = left_barred_basis_r8();
    RealMatrix b(64, 64);
    for (std::size_t k = 0; k < 64; ++k) {
      const auto& flat = basis[k].data();
      for (std::size_t i = 0; i < 64; ++i) b.at(i, k) = flat[i];
    }
    return inverse(b);  // singular only if Appendix B independence failed
  }();
  return inv;
}

}  // namespace

const RealMatrix& quat_left_unit(int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("quat_left_unit: index out of range");
  static const std::array<RealMatrix, 4> tables = [] {
    std::array<RealMatrix, 4> t;
    for (int i = 0; i < 4; ++i) t[i] = make_quat_left(i);
    return t;
  }();
  return tables[static_cast<std::size_t>(m)];
}

const RealMatrix& quat_right_unit(int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("quat_right_unit: index out of range");
  static const std::array<RealMatrix, 4> tables = [] {
    std::array<RealMatrix, 4> t;
    for (int i = 0; i < 4; ++i) t[i] = make_quat_right(i);
    return t;
  }();
  return tables[static_cast<std::size_t>(m)];
}

const RealMatrix& oct_left_unit(int m) {
  if (m < 0 || m > 7) throw std::invalid_argument("oct_left_unit: index out of range");
  static const std::array<RealMatrix, 8> tables = [] {
    std::array<RealMatrix, 8> t;
    for (int i = 0; i < 8; ++i) t[i] = make_oct_left(i);
    return t;
  }();
  return tables[static_cast<std::size_t>(m)];
}

const RealMatrix& oct_right_unit(int m) {
  if (m < 0 || m > 7) throw std::invalid_argument("oct_right_unit: index out of range");
  static const std::array<RealMatrix, 8> tables = [] {
    std::array<RealMatrix, 8> t;
    for (int i = 0; i < 8; ++i) t[i] = make_oct_right(i);
    return t;
  }();
  return tables[static_cast<std::size_t>(m)];
}

ComplexMatrix q_to_c2(const Quaternion& q) {
  // 1 -> id, e1 -> i sigma3, e2 -> -i sigma2, e3 -> -i sigma1.
  ComplexMatrix m(2, 2);
  m.at(0, 0) = {q.w, q.x};
  m.at(0, 1) = {-q.y, -q.z};
  m.at(1, 0) = {q.y, -q.z};
  m.at(1, 1) = {q.w, -q.x};
  return m;
}

ComplexMatrix qc_to_c2(const BarredQuaternion& op) {
  if (!is_complex_linear(op)) {
    throw std::domain_error("qc_to_c2: operand is not complex linear");
  }
  // 1|e1 -> i * id; complex scalars commute with the 2x2 images.
  const ComplexValue i{0, 1};
  return q_to_c2(op.c[0]) + i * q_to_c2(op.c[1]);
}

RealMatrix qr_to_r4(const BarredQuaternion& op) {
  RealMatrix out(4, 4);
  for (int m = 0; m < 4; ++m) {
    if (op.c[m].is_zero()) continue;
    const RealMatrix lm = quat_left_mult(op.c[m]);
    out = out + (m == 0 ? lm : quat_right_unit(m) * lm);
  }
  return out;
}

RealMatrix or_to_r8(const LeftBarredOctonion& op) {
  RealMatrix out(8, 8);
  for (int m = 0; m < 8; ++m) {
    if (op.c[m].is_zero()) continue;
    const RealMatrix lm = oct_left_mult(op.c[m]);
    out = out + (m == 0 ? lm : oct_right_unit(m) * lm);
  }
  return out;
}

RealMatrix right_term_to_r8(const RightBarredTerm& t) {
  if (t.unit < 1 || t.unit > 7) {
    throw std::invalid_argument("right_term_to_r8: unit must be 1..7");
  }
  return oct_left_mult(t.o) * oct_right_unit(t.unit);
}

RealMatrix symbol_to_r8(const BarredSymbol& s) {
  using Kind = BarredSymbol::Kind;
  switch (s.kind) {
    case Kind::One: return RealMatrix::identity(8);
    case Kind::LeftUnit: return oct_left_unit(s.m);
    case Kind::BarUnit: return oct_right_unit(s.m);
    case Kind::DiagBar: return oct_right_unit(s.m) * oct_left_unit(s.m);
    case Kind::LeftBarred: return oct_right_unit(s.n) * oct_left_unit(s.m);
    case Kind::RightBarred: return oct_left_unit(s.m) * oct_right_unit(s.n);
  }
  throw std::invalid_argument("symbol_to_r8: bad kind");
}

const std::vector<RealMatrix>& left_barred_basis_r8() {
  static const std::vector<RealMatrix> basis = [] {
    std::vector<RealMatrix> out;
    out.reserve(64);
    for (int m = 0; m < 8; ++m) {
      for (int u = 0; u < 8; ++u) {
        const RealMatrix lu = oct_left_unit(u);
        out.push_back(m == 0 ? lu : oct_right_unit(m) * lu);
      }
    }
    return out;
  }();
  return basis;
}

std::size_t left_barred_rank() { return rank(stack_flattened(left_barred_basis_r8())); }

LeftBarredOctonion r8_to_left_barred(const RealMatrix& m) {
  if (m.rows() != 8 || m.cols() != 8) {
    throw std::invalid_argument("r8_to_left_barred: expected an 8x8 matrix");
  }
  const std::vector<Scalar> coeffs =
      basis_matrix_inverse().apply(std::vector<Scalar>(m.data().begin(), m.data().end()));
  LeftBarredOctonion out;
  for (int slot = 0; slot < 8; ++slot) {
    for (int u = 0; u < 8; ++u) {
      out.c[slot].c[u] = coeffs[static_cast<std::size_t>(slot) * 8 + u];
    }
  }
  return out;
}

const std::vector<RealMatrix>& complex_linear_subalgebra() {
  static const std::vector<RealMatrix> result = [] {
    const auto& basis = left_barred_basis_r8();
    const RealMatrix& r1 = oct_right_unit(1);
    RealMatrix commutator_map(64, 64);
    for (std::size_t k = 0; k < 64; ++k) {
      const RealMatrix c = basis[k] * r1 - r1 * basis[k];
      for (std::size_t i = 0; i < 64; ++i) commutator_map.at(i, k) = c.data()[i];
    }
    const RealMatrix ker = kernel_basis(commutator_map);
    std::vector<RealMatrix> out;
    out.reserve(ker.rows());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      RealMatrix element(8, 8);
      for (std::size_t k = 0; k < 64; ++k) {
        if (ker.at(r, k) == 0) continue;
        element = element + ker.at(r, k) * basis[k];
      }
      out.push_back(std::move(element));
    }
    return out;
  }();
  return result;
}

ComplexMatrix oc_to_c4(const LeftBarredOctonion& op) {
  const RealMatrix m = or_to_r8(op);
  const RealMatrix& r1 = oct_right_unit(1);
  if (!(m * r1 - r1 * m).is_zero()) {
    throw std::domain_error("oc_to_c4: operator is not complex linear (does not commute with 1|e1)");
  }
  const std::array<int, 4> state_units = {0, 2, 4, 6};
  ComplexMatrix out(4, 4);
  for (int j = 0; j < 4; ++j) {
    const Octonion image = octonion_from_vec(m.apply(vec(Octonion::unit(state_units[j]))));
    const OctonionicState s = state_decompose(image);
    for (int i = 0; i < 4; ++i) out.at(i, j) = s.c[i];
  }
  return out;
}

Scalar det(const BarredQuaternion& op) { return det(qr_to_r4(op)); }

Scalar det(const OperatorMatrix& m) { return det(op_matrix_to_real(m)); }

RealMatrix op_matrix_to_real(const OperatorMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.n);
  RealMatrix out(4 * n, 4 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      const RealMatrix block = qr_to_r4(m.at(static_cast<int>(r), static_cast<int>(s)));
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          out.at(4 * r + i, 4 * s + j) = block.at(i, j);
        }
      }
    }
  }
  return out;
}

}  // namespace hypalg
