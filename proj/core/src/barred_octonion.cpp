#include "hypalg/barred_octonion.hpp"

#include "hypalg/bridge.hpp"

#include <stdexcept>

namespace hypalg {

LeftBarredOctonion LeftBarredOctonion::identity() {
  return from_left(Octonion::from_scalar(Scalar(1)));
}

LeftBarredOctonion LeftBarredOctonion::from_left(const Octonion& o) {
  LeftBarredOctonion b;
  b.c[0] = o;
  return b;
}

LeftBarredOctonion LeftBarredOctonion::term(const Octonion& o, int m) {
  if (m < 0 || m > 7) throw std::invalid_argument("term: slot must be 0..7");
  LeftBarredOctonion b;
  b.c[static_cast<std::size_t>(m)] = o;
  return b;
}

LeftBarredOctonion LeftBarredOctonion::bar_unit(int m) {
  if (m < 1 || m > 7) throw std::invalid_argument("bar_unit: index must be 1..7");
  return term(Octonion::from_scalar(Scalar(1)), m);
}

bool LeftBarredOctonion::is_zero() const {
  for (const auto& o : c) {
    if (!o.is_zero()) return false;
  }
  return true;
}

LeftBarredOctonion operator+(const LeftBarredOctonion& a, const LeftBarredOctonion& b) {
  LeftBarredOctonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

LeftBarredOctonion operator-(const LeftBarredOctonion& a, const LeftBarredOctonion& b) {
  LeftBarredOctonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

LeftBarredOctonion operator-(const LeftBarredOctonion& a) {
  LeftBarredOctonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = -a.c[i];
  return out;
}

LeftBarredOctonion operator*(const Scalar& s, const LeftBarredOctonion& a) {
  LeftBarredOctonion out;
  for (int i = 0; i < 8; ++i) out.c[i] = s * a.c[i];
  return out;
}

Octonion apply_left(const LeftBarredOctonion& op, const Octonion& psi) {
  Octonion out = op.c[0] * psi;
  for (int m = 1; m < 8; ++m) {
    if (op.c[m].is_zero()) continue;
    // Grouping is strictly (o_m psi) e_m.
    out = out + (op.c[m] * psi) * Octonion::unit(m);
  }
  return out;
}

Octonion apply_right(const RightBarredTerm& t, const Octonion& psi) {
  if (t.unit < 1 || t.unit > 7) throw std::invalid_argument("apply_right: unit must be 1..7");
  // Grouping is strictly o (psi e_m).
  return t.o * (psi * Octonion::unit(t.unit));
}

LeftBarredOctonion reduce_right(const RightBarredTerm& t) {
  return r8_to_left_barred(right_term_to_r8(t));
}

LeftBarredOctonion compose(const LeftBarredOctonion& a, const LeftBarredOctonion& b) {
  return r8_to_left_barred(or_to_r8(a) * or_to_r8(b));
}

LeftBarredOctonion correction_term(int k) {
  if (k != 3 && k != 5 && k != 7) {
    throw std::invalid_argument("correction_term: index must be 3, 5 or 7");
  }
  const LeftBarredOctonion left = LeftBarredOctonion::term(Octonion::unit(k), 1);
  const LeftBarredOctonion right = reduce_right(RightBarredTerm{Octonion::unit(k), 1});
  return scalar(1, 2) * (left - right);
}

LeftBarredOctonion composite_unit(int m) {
  switch (m) {
    case 2:
      return LeftBarredOctonion::from_left(Octonion::unit(2)) + correction_term(3);
    case 4:
      return LeftBarredOctonion::from_left(Octonion::unit(4)) + correction_term(5);
    case 6:
      return LeftBarredOctonion::from_left(Octonion::unit(6)) - correction_term(7);
    default:
      throw std::invalid_argument("composite_unit: index must be 2, 4 or 6");
  }
}

LeftBarredOctonion hermitian_partner(int k) {
  if (k != 3 && k != 5 && k != 7) {
    throw std::invalid_argument("hermitian_partner: index must be 3, 5 or 7");
  }
  const LeftBarredOctonion left = LeftBarredOctonion::term(Octonion::unit(k), 1);
  const LeftBarredOctonion right = reduce_right(RightBarredTerm{Octonion::unit(k), 1});
  return scalar(1, 2) * (left + right);
}

OctonionicState state_decompose(const Octonion& o) {
  // o = c1 + e2 c2 + e4 c3 + e6 c4 with
  // e2(x + e1 y) = x e2 - y e3, e4(x + e1 y) = x e4 - y e5,
  // e6(x + e1 y) = x e6 + y e7.
  OctonionicState s;
  s.c[0] = {o.c[0], o.c[1]};
  s.c[1] = {o.c[2], -o.c[3]};
  s.c[2] = {o.c[4], -o.c[5]};
  s.c[3] = {o.c[6], o.c[7]};
  return s;
}

Octonion state_compose(const OctonionicState& s) {
  Octonion o;
  o.c[0] = s.c[0].re;
  o.c[1] = s.c[0].im;
  o.c[2] = s.c[1].re;
  o.c[3] = -s.c[1].im;
  o.c[4] = s.c[2].re;
  o.c[5] = -s.c[2].im;
  o.c[6] = s.c[3].re;
  o.c[7] = s.c[3].im;
  return o;
}

AntihermiticityVerdict antihermiticity_test(const LeftBarredOctonion& op) {
  AntihermiticityVerdict verdict;
  for (int i = 0; i < 8; ++i) {
    const Octonion psi = Octonion::unit(i);
    const Octonion a_psi = apply_left(op, psi);
    for (int j = 0; j < 8; ++j) {
      const Octonion phi = Octonion::unit(j);
      const ComplexValue lhs = complex_projection(conjugate(a_psi) * phi);
      const ComplexValue rhs = -complex_projection(conjugate(psi) * apply_left(op, phi));
      if (!(lhs == rhs)) {
        verdict.antihermitian = false;
        verdict.witness = AntihermiticityWitness{psi, phi, lhs, rhs};
        return verdict;
      }
    }
  }
  verdict.antihermitian = true;
  return verdict;
}

std::vector<BarredSymbol> barred_family_symbols() {
  using Kind = BarredSymbol::Kind;
  std::vector<BarredSymbol> out;
  out.reserve(106);
  out.push_back({Kind::One, 0, 0});
  for (int m = 1; m <= 7; ++m) out.push_back({Kind::LeftUnit, m, 0});
  for (int m = 1; m <= 7; ++m) out.push_back({Kind::BarUnit, m, 0});
  for (int m = 1; m <= 7; ++m) out.push_back({Kind::DiagBar, m, m});
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      if (m != n) out.push_back({Kind::LeftBarred, m, n});
    }
  }
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      if (m != n) out.push_back({Kind::RightBarred, m, n});
    }
  }
  return out;
}

std::string to_string(const BarredSymbol& s) {
  using Kind = BarredSymbol::Kind;
  switch (s.kind) {
    case Kind::One: return "1";
    case Kind::LeftUnit: return "e" + std::to_string(s.m);
    case Kind::BarUnit: return "1|e" + std::to_string(s.m);
    case Kind::DiagBar: return "e" + std::to_string(s.m) + "|e" + std::to_string(s.m);
    case Kind::LeftBarred: return "e" + std::to_string(s.m) + ")e" + std::to_string(s.n);
    case Kind::RightBarred: return "e" + std::to_string(s.m) + "(e" + std::to_string(s.n);
  }
  return {};
}

}  // namespace hypalg
