#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypalg {

/// Exact rational scalar. Everything upstream of the lorentz module computes
/// over these; equality is exact and there are no tolerances.
using Scalar = mpq_class;

/// num/den as an exact rational (canonicalized). den must be nonzero.
Scalar scalar(long num, long den = 1);

/// Parses "3", "-7/4", "+2/6" (whitespace trimmed, result canonicalized).
Scalar parse_scalar(std::string_view text);

/// Canonical form: "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Scalar& s);

double to_double(const Scalar& s);

}  // namespace hypalg
