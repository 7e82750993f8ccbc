#include "hypalg/octonion.hpp"

#include <stdexcept>

namespace hypalg {

Octonion Octonion::unit(int i) {
  if (i < 0 || i > 7) throw std::invalid_argument("Octonion::unit: index out of range");
  Octonion o;
  o.c[static_cast<std::size_t>(i)] = 1;
  return o;
}

Octonion Octonion::from_scalar(Scalar s) {
  Octonion o;
  o.c[0] = std::move(s);
  return o;
}

bool Octonion::is_zero() const {
  for (const auto& v : c) {
    if (v != 0) return false;
  }
  return true;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

Octonion operator-(const Octonion& a) {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = -a.c[i];
  return out;
}

Octonion operator*(const Scalar& s, const Octonion& a) {
  Octonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = s * a.c[i];
  return out;
}

Octonion Octonion::mul(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == 0) continue;
      Scalar term = a.c[i] * b.c[j];
      if (kOctTable.sign[i][j] < 0) term = -term;
      out.c[kOctTable.index[i][j]] += term;
    }
  }
  return out;
}

Octonion conjugate(const Octonion& o) {
  Octonion out;
  out.c[0] = o.c[0];
  for (int i = 1; i < 8; ++i) out.c[i] = -o.c[i];
  return out;
}

Scalar norm2(const Octonion& o) {
  Scalar n = 0;
  for (const auto& v : o.c) n += v * v;
  return n;
}

Octonion inverse(const Octonion& o) {
  const Scalar n = norm2(o);
  if (n == 0) throw std::domain_error("octonion inverse: division by zero");
  const Scalar inv_n = Scalar(1) / n;
  return inv_n * conjugate(o);
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

ComplexValue complex_projection(const Octonion& o) { return {o.c[0], o.c[1]}; }

const StructureConstants& structure_constants() {
  static const StructureConstants table = [] {
    StructureConstants sc;
    for (int m = 1; m < 8; ++m) {
      for (int n = 1; n < 8; ++n) {
        if (m == n) continue;
        const int p = kOctTable.index[m][n];
        sc.eps3[m][n][p] = kOctTable.sign[m][n];
      }
    }
    // eps4 from exhaustive basis associators: {e_m, e_n, e_p} = 2 eps e_s.
    for (int m = 1; m < 8; ++m) {
      for (int n = 1; n < 8; ++n) {
        for (int p = 1; p < 8; ++p) {
          const Octonion a =
              associator(Octonion::unit(m), Octonion::unit(n), Octonion::unit(p));
          for (int s = 1; s < 8; ++s) {
            if (a.c[s] == 2) {
              sc.eps4[m][n][p][s] = 1;
            } else if (a.c[s] == -2) {
              sc.eps4[m][n][p][s] = -1;
            }
          }
        }
      }
    }
    return sc;
  }();
  return table;
}

}  // namespace hypalg
