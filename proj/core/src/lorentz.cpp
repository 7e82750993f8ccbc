#include "hypalg/lorentz.hpp"

#include "hypalg/bridge.hpp"

#include <cmath>
#include <stdexcept>

namespace hypalg {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

/// Double quaternion, used only for the rotation sandwich formula; same basis
/// table as the exact type.
struct QuatD {
  std::array<double, 4> c{};
};

QuatD qd_mul(const QuatD& a, const QuatD& b) {
  QuatD out;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0.0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c[j] == 0.0) continue;
      out.c[kQuatTable.index[i][j]] += kQuatTable.sign[i][j] * a.c[i] * b.c[j];
    }
  }
  return out;
}

}  // namespace

std::string to_string(LorentzKind k) {
  switch (k) {
    case LorentzKind::BoostX: return "boost_x";
    case LorentzKind::BoostY: return "boost_y";
    case LorentzKind::BoostZ: return "boost_z";
    case LorentzKind::RotX: return "rot_x";
    case LorentzKind::RotY: return "rot_y";
    case LorentzKind::RotZ: return "rot_z";
  }
  return {};
}

LorentzKind lorentz_kind_from_string(const std::string& name) {
  if (name == "boost_x") return LorentzKind::BoostX;
  if (name == "boost_y") return LorentzKind::BoostY;
  if (name == "boost_z") return LorentzKind::BoostZ;
  if (name == "rot_x") return LorentzKind::RotX;
  if (name == "rot_y") return LorentzKind::RotY;
  if (name == "rot_z") return LorentzKind::RotZ;
  throw std::invalid_argument("unknown lorentz generator '" + name + "'");
}

BarredQuaternion lorentz_generator(LorentzKind k) {
  const Scalar half = scalar(1, 2);
  auto term = [](int m, int n) { return BarredQuaternion::term(Quaternion::unit(m), n); };
  switch (k) {
    case LorentzKind::BoostX: return half * (term(3, 2) - term(2, 3));
    case LorentzKind::BoostY: return half * (term(1, 3) - term(3, 1));
    case LorentzKind::BoostZ: return half * (term(2, 1) - term(1, 2));
    case LorentzKind::RotX: return half * (term(1, 0) - term(0, 1));
    case LorentzKind::RotY: return half * (term(2, 0) - term(0, 2));
    case LorentzKind::RotZ: return half * (term(3, 0) - term(0, 3));
  }
  throw std::invalid_argument("lorentz_generator: bad kind");
}

std::array<std::array<double, 4>, 4> generator_matrix(LorentzKind k) {
  const RealMatrix m = qr_to_r4(lorentz_generator(k));
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = to_double(m.at(i, j));
  }
  return out;
}

std::array<std::array<double, 4>, 4> expm4(const std::array<std::array<double, 4>, 4>& m,
                                           double t) {
  // Scaling and squaring: scale t*M until its max row sum is <= 1/2, run the
  // Taylor series to machine-precision stagnation, square back up.
  Mat4 a{};
  double norm = 0.0;
  for (int i = 0; i < 4; ++i) {
    double row = 0.0;
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m[i][j] * t;
      row += std::fabs(a[i][j]);
    }
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a) {
    for (auto& v : row) v *= scale;
  }

  Mat4 result = identity4();
  Mat4 power = identity4();
  for (int order = 1; order <= 24; ++order) {
    power = matmul(power, a);
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        power[i][j] /= order;
        if (power[i][j] != 0.0) all_zero = false;
        result[i][j] += power[i][j];
      }
    }
    if (all_zero) break;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

Event transform(LorentzKind k, double theta, const Event& ev) {
  const Mat4 x = expm4(generator_matrix(k), theta);
  Event out;
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += x[i][j] * ev.q[j];
    out.q[i] = acc;
  }
  return out;
}

double interval(const Event& ev) {
  // Real projection of q†(g q); g's 4x4 image is diag(1,-1,-1,-1).
  QuatD q{ev.q};
  QuatD gq{{ev.q[0], -ev.q[1], -ev.q[2], -ev.q[3]}};
  QuatD qdag{{q.c[0], -q.c[1], -q.c[2], -q.c[3]}};
  return qd_mul(qdag, gq).c[0];
}

Event sandwich_rotate(LorentzKind axis, double alpha, const Event& ev) {
  int u;
  switch (axis) {
    case LorentzKind::RotX: u = 1; break;
    case LorentzKind::RotY: u = 2; break;
    case LorentzKind::RotZ: u = 3; break;
    default: throw std::invalid_argument("sandwich_rotate: rotation kinds only");
  }
  QuatD exp_pos{};
  exp_pos.c[0] = std::cos(alpha / 2.0);
  exp_pos.c[u] = std::sin(alpha / 2.0);
  QuatD exp_neg{};
  exp_neg.c[0] = exp_pos.c[0];
  exp_neg.c[u] = -exp_pos.c[u];

  QuatD r{ev.q};  // sandwich acts on the spatial part; ct rides along
  r.c[0] = 0.0;
  const QuatD rotated = qd_mul(qd_mul(exp_pos, r), exp_neg);
  Event out;
  out.q[0] = ev.q[0];
  for (int i = 1; i < 4; ++i) out.q[i] = rotated.c[i];
  return out;
}

}  // namespace hypalg
