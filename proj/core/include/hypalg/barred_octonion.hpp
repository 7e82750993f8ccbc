#pragma once

#include "hypalg/octonion.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hypalg {

/// Left barred octonionic operator o0 + sum_m o_m ) e_m, the canonical
/// 64-parameter carrier. Action groups strictly as (o_m psi) e_m; the
/// ambiguous unparenthesized form o_m | e_m of nonassociative operators is
/// deliberately not constructible. c[m] is the slot-m coefficient, c[0] the
/// unbarred left factor.
struct LeftBarredOctonion {
  std::array<Octonion, 8> c{};

  LeftBarredOctonion() = default;

  static LeftBarredOctonion identity();
  static LeftBarredOctonion from_left(const Octonion& o);
  /// o ) e_m, m in 0..7 (m = 0 is the unbarred slot).
  static LeftBarredOctonion term(const Octonion& o, int m);
  /// 1|e_m == 1)e_m == 1(e_m (safe case, no grouping ambiguity).
  static LeftBarredOctonion bar_unit(int m);

  bool is_zero() const;

  friend bool operator==(const LeftBarredOctonion& a, const LeftBarredOctonion& b) {
    return a.c == b.c;
  }
  friend LeftBarredOctonion operator+(const LeftBarredOctonion& a, const LeftBarredOctonion& b);
  friend LeftBarredOctonion operator-(const LeftBarredOctonion& a, const LeftBarredOctonion& b);
  friend LeftBarredOctonion operator-(const LeftBarredOctonion& a);
  friend LeftBarredOctonion operator*(const Scalar& s, const LeftBarredOctonion& a);
};

/// Right barred term o ( e_m, acting as psi -> o (psi e_m). Kept only
/// transiently; reduce_right turns it into canonical left-barred form.
struct RightBarredTerm {
  Octonion o;
  int unit = 1;  // 1..7
};

/// psi -> o0 psi + sum (o_m psi) e_m.
Octonion apply_left(const LeftBarredOctonion& op, const Octonion& psi);

/// psi -> o (psi e_m).
Octonion apply_right(const RightBarredTerm& t, const Octonion& psi);

/// The unique left-barred operator with the same action, found by an exact
/// solve in the 64-dimensional left-barred basis (via the 8x8 real matrix
/// translation). Exact: apply_left(reduce_right(t), psi) = apply_right(t, psi)
/// for every psi.
LeftBarredOctonion reduce_right(const RightBarredTerm& t);

/// Operator product (apply b first), computed through the matrix translation
/// and solved back into left-barred form.
LeftBarredOctonion compose(const LeftBarredOctonion& a, const LeftBarredOctonion& b);

/// ((e_k)e1 - e_k(e1)/2 for odd k in {3,5,7}; annihilates every quaternion
/// (the span of {1,e1,e2,e3}).
LeftBarredOctonion correction_term(int k);

/// The composite antihermitian units "e2", "e4", "e6" of the complex linear
/// octonionic algebra:
///   "e2" = e2 + ((e3)e1 - e3(e1)/2
///   "e4" = e4 + ((e5)e1 - e5(e1)/2
///   "e6" = e6 - ((e7)e1 - e7(e1)/2
/// stored in reduced left-barred form. m must be 2, 4 or 6.
LeftBarredOctonion composite_unit(int m);

/// Hermitian counterparts ((e_k)e1 + e_k(e1)/2, k in {3,5,7}.
LeftBarredOctonion hermitian_partner(int k);

/// Symplectic state coordinates o = c1 + e2 c2 + e4 c3 + e6 c4.
struct OctonionicState {
  std::array<ComplexValue, 4> c{};

  friend bool operator==(const OctonionicState& a, const OctonionicState& b) {
    return a.c == b.c;
  }
};

OctonionicState state_decompose(const Octonion& o);
Octonion state_compose(const OctonionicState& s);

struct AntihermiticityWitness {
  Octonion psi, phi;
  ComplexValue lhs;  // P_c((A psi)† phi)
  ComplexValue rhs;  // -P_c(psi† (A phi))
};

struct AntihermiticityVerdict {
  bool antihermitian = false;
  std::optional<AntihermiticityWitness> witness;
};

/// Checks P_c((A psi)† phi) = -P_c(psi† (A phi)) exhaustively over all 64
/// basis-state pairs. Exact, deterministic; returns the first violating pair.
AntihermiticityVerdict antihermiticity_test(const LeftBarredOctonion& op);

/// One symbol of the barred operator family counted in the 106 -> 64
/// reduction.
struct BarredSymbol {
  enum class Kind {
    One,         // 1
    LeftUnit,    // e_m
    BarUnit,     // 1|e_m
    DiagBar,     // e_m|e_m (left and right grouping agree)
    LeftBarred,  // e_m ) e_n, m != n
    RightBarred  // e_m ( e_n, m != n
  };
  Kind kind = Kind::One;
  int m = 0, n = 0;
};

/// The 106 symbols {1, e_m, 1|e_m} + {e_m|e_m} + {e_m)e_n} + {e_m(e_n} in the
/// order they are counted.
std::vector<BarredSymbol> barred_family_symbols();

std::string to_string(const BarredSymbol& s);

}  // namespace hypalg
