#pragma once

#include "hypalg/barred_octonion.hpp"
#include "hypalg/barred_quaternion.hpp"
#include "hypalg/matrix.hpp"
#include "hypalg/octonion.hpp"
#include "hypalg/quaternion.hpp"

#include <string>
#include <string_view>

namespace hypalg {

// Text forms. Grammar (whitespace-insensitive): a sum of signed terms
//   term := rational ["e" digit] | "e" digit
// with signs required between terms, e.g. "1 - 3/2 e1 + 2 e3". Barred
// quaternions parenthesize each slot: "(q0) + (q1)|e1 + (q2)|e2 + (q3)|e3";
// a bare quaternion expression with no parentheses parses as the q0 slot.

std::string to_string(const Quaternion& q);
std::string to_string(const Octonion& o);
std::string to_string(const BarredQuaternion& op);

Quaternion parse_quaternion(std::string_view text);
Octonion parse_octonion(std::string_view text);
BarredQuaternion parse_barred_quaternion(std::string_view text);

/// Comma-separated rows, one line per row.
std::string to_csv(const RealMatrix& m);
std::string to_csv(const ComplexMatrix& m);

std::string to_text(const RealMatrix& m);
std::string to_text(const ComplexMatrix& m);

}  // namespace hypalg
