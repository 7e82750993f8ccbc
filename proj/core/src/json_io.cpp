#include "hypalg/json_io.hpp"

#include "hypalg/text_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace hypalg {

namespace {

using nlohmann::json;

json quaternion_json(const Quaternion& q) {
  return json::array(
      {to_string(q.w), to_string(q.x), to_string(q.y), to_string(q.z)});
}

Quaternion quaternion_from(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("json: quaternion must be an array of 4 rationals");
  }
  Quaternion q;
  for (int i = 0; i < 4; ++i) q.comp(i) = parse_scalar(j[i].get<std::string>());
  return q;
}

json octonion_json(const Octonion& o) {
  json arr = json::array();
  for (const auto& c : o.c) arr.push_back(to_string(c));
  return arr;
}

Octonion octonion_from(const json& j) {
  if (!j.is_array() || j.size() != 8) {
    throw std::invalid_argument("json: octonion must be an array of 8 rationals");
  }
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = parse_scalar(j[i].get<std::string>());
  return o;
}

json complex_json(const ComplexValue& v) {
  return json{{"re", to_string(v.re)}, {"im", to_string(v.im)}};
}

json barred_quaternion_json(const BarredQuaternion& op) {
  return json{{"q0", quaternion_json(op.c[0])},
              {"q1", quaternion_json(op.c[1])},
              {"q2", quaternion_json(op.c[2])},
              {"q3", quaternion_json(op.c[3])}};
}

json real_matrix_json(const RealMatrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

}  // namespace

std::string to_json(const Quaternion& q) { return quaternion_json(q).dump(); }

std::string to_json(const Octonion& o) { return octonion_json(o).dump(); }

std::string to_json(const BarredQuaternion& op) { return barred_quaternion_json(op).dump(); }

std::string to_json(const LeftBarredOctonion& op) {
  json om = json::array();
  for (int m = 1; m < 8; ++m) om.push_back(octonion_json(op.c[m]));
  return json{{"o0", octonion_json(op.c[0])}, {"om", std::move(om)}}.dump();
}

std::string to_json(const RealMatrix& m) { return real_matrix_json(m).dump(); }

std::string to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m.at(r, c)));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}}.dump();
}

std::string to_json(const AntihermiticityVerdict& v) {
  json out{{"antihermitian", v.antihermitian}, {"witness", nullptr}};
  if (v.witness) {
    out["witness"] = json{{"psi", octonion_json(v.witness->psi)},
                          {"phi", octonion_json(v.witness->phi)},
                          {"lhs", complex_json(v.witness->lhs)},
                          {"rhs", complex_json(v.witness->rhs)}};
  }
  return out.dump();
}

std::string to_json(const GeneratorBasis& basis) {
  json gens = json::array();
  for (const auto& op : basis.ops) {
    json rows = json::array();
    for (int r = 0; r < op.n; ++r) {
      json row = json::array();
      for (int s = 0; s < op.n; ++s) row.push_back(barred_quaternion_json(op.at(r, s)));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  json out{{"spec",
            {{"family", to_string(basis.spec.family)},
             {"carrier", to_string(basis.spec.carrier)},
             {"n", basis.spec.n}}},
           {"dim", basis.dim},
           {"generators", std::move(gens)}};
  if (basis.su_collapsed) out["notice"] = "SU coincides with U for this carrier";
  return out.dump();
}

Quaternion quaternion_from_json(const std::string& text) {
  return quaternion_from(json::parse(text));
}

Octonion octonion_from_json(const std::string& text) { return octonion_from(json::parse(text)); }

BarredQuaternion barred_quaternion_from_json(const std::string& text) {
  const json j = json::parse(text);
  BarredQuaternion op;
  const char* keys[4] = {"q0", "q1", "q2", "q3"};
  for (int m = 0; m < 4; ++m) {
    if (j.contains(keys[m])) op.c[m] = quaternion_from(j.at(keys[m]));
  }
  return op;
}

LeftBarredOctonion left_barred_from_json(const std::string& text) {
  const json j = json::parse(text);
  LeftBarredOctonion op;
  if (j.contains("o0")) op.c[0] = octonion_from(j.at("o0"));
  if (j.contains("om")) {
    const json& om = j.at("om");
    if (!om.is_array() || om.size() != 7) {
      throw std::invalid_argument("json: 'om' must hold 7 octonions");
    }
    for (int m = 1; m < 8; ++m) op.c[m] = octonion_from(om[m - 1]);
  }
  return op;
}

RealMatrix real_matrix_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  RealMatrix m(rows, cols);
  const json& data = j.at("data");
  if (!data.is_array() || data.size() != rows) {
    throw std::invalid_argument("json: matrix data has wrong row count");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (!data[r].is_array() || data[r].size() != cols) {
      throw std::invalid_argument("json: matrix data has wrong column count");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_scalar(data[r][c].get<std::string>());
  }
  return m;
}

}  // namespace hypalg
