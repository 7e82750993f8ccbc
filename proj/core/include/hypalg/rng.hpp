#pragma once

#include "hypalg/barred_quaternion.hpp"
#include "hypalg/octonion.hpp"
#include "hypalg/operator_matrix.hpp"

#include <cstdint>
#include <random>

namespace hypalg {

/// Deterministic generator for seeded property tests. Draws are reduced from
/// the raw engine output (std::uniform_int_distribution is not portable
/// across standard libraries, raw mt19937_64 words are).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  /// Integer in [lo, hi].
  long integer(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  double real(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  /// Rational with numerator in [-9, 9] and denominator in [1, 9].
  Scalar rational() { return scalar(integer(-9, 9), integer(1, 9)); }

  Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

  Octonion octonion() {
    Octonion o;
    for (auto& v : o.c) v = rational();
    return o;
  }

  BarredQuaternion barred_quaternion() {
    BarredQuaternion b;
    for (auto& q : b.c) q = quaternion();
    return b;
  }

  OperatorMatrix quaternionic_matrix(int n) {
    OperatorMatrix m(n);
    for (auto& entry : m.e) entry = BarredQuaternion::from_left(quaternion());
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hypalg
