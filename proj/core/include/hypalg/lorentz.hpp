#pragma once

#include "hypalg/barred_quaternion.hpp"

#include <array>
#include <string>

namespace hypalg {

/// Space-time point ct + e1 x + e2 y + e3 z. The only floating-point values
/// in the library live here; everything upstream is exact.
struct Event {
  std::array<double, 4> q{};  // (ct, x, y, z)
};

enum class LorentzKind { BoostX, BoostY, BoostZ, RotX, RotY, RotZ };

std::string to_string(LorentzKind k);
LorentzKind lorentz_kind_from_string(const std::string& name);

/// The exact barred generator from the one-dimensional realization:
///   boost (ct,x): (e3|e2 - e2|e3)/2   rotation around x: (e1 - 1|e1)/2
/// and cyclic. Every generator satisfies gA + A†g = 0 exactly.
BarredQuaternion lorentz_generator(LorentzKind k);

/// 4x4 double image of the generator (translation of the exact operator).
std::array<std::array<double, 4>, 4> generator_matrix(LorentzKind k);

/// exp(theta*M) by scaling and squaring on the 4x4 image. Rotations turn the
/// axes by +theta (rot_z: x toward y); boosts mix ct with one axis at
/// rapidity theta oriented so that (1,0,0,0) -> (cosh t, -sinh t, 0, 0) under
/// boost_x, i.e. exactly exp of the generator above.
Event transform(LorentzKind k, double theta, const Event& ev);

/// Real projection of q†(g q) = (ct)² - x² - y² - z².
double interval(const Event& ev);

/// The quaternionic rotation sandwich exp(a/2 e_u) (e.r) exp(-a/2 e_u) for a
/// pure-space event; agrees with transform() on rotations.
Event sandwich_rotate(LorentzKind axis, double alpha, const Event& ev);

/// exp(t*M) for a 4x4 matrix; scaling-and-squaring Taylor, accurate to
/// ~1e-15 per squaring step on the generators used here.
std::array<std::array<double, 4>, 4> expm4(const std::array<std::array<double, 4>, 4>& m,
                                           double t);

}  // namespace hypalg
