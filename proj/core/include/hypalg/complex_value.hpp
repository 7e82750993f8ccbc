#pragma once

#include "hypalg/scalar.hpp"

namespace hypalg {

/// Element of span{1, e1} with exact rational parts. This is the value type
/// of complex traces, complex projections and complex matrix entries; "im"
/// is the e1 coefficient.
struct ComplexValue {
  Scalar re{0};
  Scalar im{0};

  ComplexValue() = default;
  ComplexValue(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const ComplexValue& a, const ComplexValue& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexValue operator-(const ComplexValue& a, const ComplexValue& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexValue operator-(const ComplexValue& a) { return {-a.re, -a.im}; }
  friend ComplexValue operator*(const ComplexValue& a, const ComplexValue& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexValue operator*(const Scalar& s, const ComplexValue& a) {
    return {s * a.re, s * a.im};
  }
};

inline ComplexValue conjugate(const ComplexValue& c) { return {c.re, -c.im}; }

std::string to_string(const ComplexValue& c);

}  // namespace hypalg
