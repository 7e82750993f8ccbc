#pragma once

#include "hypalg/barred_octonion.hpp"
#include "hypalg/barred_quaternion.hpp"
#include "hypalg/group_lab.hpp"
#include "hypalg/matrix.hpp"

#include <string>

namespace hypalg {

// JSON wire formats (rationals are canonical "p/q" strings):
//   quaternion            ["1","0","-3/2","0"]
//   barred quaternion     {"q0":[...4...], "q1":[...], "q2":[...], "q3":[...]}
//   left barred octonion  {"o0":[...8...], "om":[[...8...] x7]}
//   real matrix           {"rows":n, "cols":m, "data":[[...strings...]]}
//   complex matrix        {"rows":n, "cols":m, "data":[[{"re":..,"im":..}]]}
//   verdict               {"antihermitian":bool, "witness":{...}|null}

std::string to_json(const Quaternion& q);
std::string to_json(const Octonion& o);
std::string to_json(const BarredQuaternion& op);
std::string to_json(const LeftBarredOctonion& op);
std::string to_json(const RealMatrix& m);
std::string to_json(const ComplexMatrix& m);
std::string to_json(const AntihermiticityVerdict& v);
std::string to_json(const GeneratorBasis& basis);

Quaternion quaternion_from_json(const std::string& text);
Octonion octonion_from_json(const std::string& text);
BarredQuaternion barred_quaternion_from_json(const std::string& text);
LeftBarredOctonion left_barred_from_json(const std::string& text);
RealMatrix real_matrix_from_json(const std::string& text);

}  // namespace hypalg
