#include "hypalg/quaternion.hpp"

#include <stdexcept>

namespace hypalg {

Scalar scalar(long num, long den) {
  if (den == 0) throw std::domain_error("scalar: zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  std::string trimmed;
  trimmed.reserve(text.size());
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    trimmed.push_back(ch);
  }
  if (trimmed.empty()) throw std::invalid_argument("parse_scalar: empty input");
  if (trimmed.front() == '+') trimmed.erase(trimmed.begin());
  Scalar s;
  try {
    s = Scalar(trimmed);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_scalar: bad rational '" + std::string(text) + "'");
  }
  if (s.get_den() == 0) throw std::domain_error("parse_scalar: zero denominator");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

double to_double(const Scalar& s) { return s.get_d(); }

std::string to_string(const ComplexValue& c) {
  if (c.re == 0 && c.im == 0) return "0";
  std::string out;
  if (c.re != 0) out = to_string(c.re);
  if (c.im != 0) {
    if (out.empty()) {
      out = (c.im < 0 ? "-" : "");
    } else {
      out += (c.im < 0 ? " - " : " + ");
    }
    Scalar mag = abs(c.im);
    out += to_string(mag) + " e1";
  }
  return out;
}

Quaternion Quaternion::unit(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("Quaternion::unit: index out of range");
  Quaternion q;
  q.comp(i) = 1;
  return q;
}

const Scalar& Quaternion::comp(int i) const {
  switch (i) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::invalid_argument("Quaternion::comp: index out of range");
  }
}

Scalar& Quaternion::comp(int i) {
  return const_cast<Scalar&>(static_cast<const Quaternion*>(this)->comp(i));
}

Quaternion Quaternion::mul(const Quaternion& a, const Quaternion& b) {
  Quaternion out;
  for (int i = 0; i < 4; ++i) {
    if (a.comp(i) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.comp(j) == 0) continue;
      Scalar term = a.comp(i) * b.comp(j);
      if (kQuatTable.sign[i][j] < 0) term = -term;
      out.comp(kQuatTable.index[i][j]) += term;
    }
  }
  return out;
}

Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

Quaternion transpose(const Quaternion& q) { return {q.w, q.x, -q.y, q.z}; }

Quaternion star(const Quaternion& q) { return {q.w, -q.x, -q.y, q.z}; }

Scalar norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

Quaternion inverse(const Quaternion& q) {
  const Scalar n = norm2(q);
  if (n == 0) throw std::domain_error("quaternion inverse: division by zero");
  const Scalar inv_n = Scalar(1) / n;
  return inv_n * conjugate(q);
}

Quaternion sandwich_conjugation(const Quaternion& q, int axis, bool dagger_form) {
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("sandwich_conjugation: axis must be 1..3");
  }
  const Quaternion e = Quaternion::unit(axis);
  const Quaternion inner = dagger_form ? conjugate(q) : q;
  return -(e * inner * e);
}

Quaternion six_conjugation(const Quaternion& q, int selector) {
  // 1..3: flip e_selector only; 4..6: keep e_{selector-3}, flip the others.
  switch (selector) {
    case 1: return {q.w, -q.x, q.y, q.z};
    case 2: return {q.w, q.x, -q.y, q.z};
    case 3: return {q.w, q.x, q.y, -q.z};
    case 4: return {q.w, q.x, -q.y, -q.z};
    case 5: return {q.w, -q.x, q.y, -q.z};
    case 6: return {q.w, -q.x, -q.y, q.z};
    default: throw std::invalid_argument("six_conjugation: selector must be 1..6");
  }
}

ComplexValue complex_projection(const Quaternion& q) { return {q.w, q.x}; }

Scalar real_projection(const Quaternion& q) { return q.w; }

Quaternion embed(const ComplexValue& c) { return {c.re, c.im, 0, 0}; }

}  // namespace hypalg
