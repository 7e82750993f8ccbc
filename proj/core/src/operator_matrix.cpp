#include "hypalg/operator_matrix.hpp"

#include <stdexcept>

namespace hypalg {

OperatorMatrix OperatorMatrix::identity(int n) {
  OperatorMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = BarredQuaternion::identity();
  return m;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& op : e) {
    if (!op.is_zero()) return false;
  }
  return true;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("operator matrix add: shape mismatch");
  OperatorMatrix out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("operator matrix sub: shape mismatch");
  OperatorMatrix out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

OperatorMatrix operator*(const Scalar& s, const OperatorMatrix& a) {
  OperatorMatrix out(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = s * a.e[i];
  return out;
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("operator matrix compose: shape mismatch");
  OperatorMatrix out(a.n);
  for (int r = 0; r < a.n; ++r) {
    for (int s = 0; s < a.n; ++s) {
      BarredQuaternion acc;
      for (int k = 0; k < a.n; ++k) {
        acc = acc + compose(a.at(r, k), b.at(k, s));
      }
      out.at(r, s) = acc;
    }
  }
  return out;
}

OperatorMatrix dagger(const OperatorMatrix& m) {
  OperatorMatrix out(m.n);
  for (int r = 0; r < m.n; ++r) {
    for (int s = 0; s < m.n; ++s) out.at(r, s) = dagger(m.at(s, r));
  }
  return out;
}

OperatorMatrix btranspose(const OperatorMatrix& m) {
  OperatorMatrix out(m.n);
  for (int r = 0; r < m.n; ++r) {
    for (int s = 0; s < m.n; ++s) out.at(r, s) = btranspose(m.at(s, r));
  }
  return out;
}

OperatorMatrix naive_transpose(const OperatorMatrix& m) {
  OperatorMatrix out(m.n);
  for (int r = 0; r < m.n; ++r) {
    for (int s = 0; s < m.n; ++s) out.at(r, s) = m.at(s, r);
  }
  return out;
}

OperatorMatrix diag_operator(const BarredQuaternion& op, int n) {
  OperatorMatrix out(n);
  for (int i = 0; i < n; ++i) out.at(i, i) = op;
  return out;
}

std::vector<Quaternion> apply(const OperatorMatrix& m, const std::vector<Quaternion>& state) {
  if (state.size() != static_cast<std::size_t>(m.n)) {
    throw std::invalid_argument("operator matrix apply: shape mismatch");
  }
  std::vector<Quaternion> out(state.size());
  for (int r = 0; r < m.n; ++r) {
    for (int s = 0; s < m.n; ++s) {
      out[r] = out[r] + apply(m.at(r, s), state[s]);
    }
  }
  return out;
}

std::vector<Scalar> flatten(const OperatorMatrix& m) {
  std::vector<Scalar> out;
  out.reserve(m.e.size() * 16);
  for (const auto& entry : m.e) {
    for (int slot = 0; slot < 4; ++slot) {
      for (int comp = 0; comp < 4; ++comp) {
        out.push_back(entry.c[slot].comp(comp));
      }
    }
  }
  return out;
}

}  // namespace hypalg
