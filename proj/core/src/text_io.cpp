#include "hypalg/text_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hypalg {

namespace {

/// Renders sum-of-terms text for a coefficient array over units e1..e{n-1}.
std::string render_terms(const Scalar* coeffs, int count) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    const Scalar& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    Scalar mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_term = i > 0;
    if (!unit_term || mag != 1) {
      out += to_string(mag);
      if (unit_term) out += " ";
    }
    if (unit_term) out += "e" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    if (pos_ >= text_.size()) throw std::invalid_argument("parse: unexpected end of input");
    return text_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  /// digits[/digits]
  Scalar rational() {
    skip_ws();
    std::string num = digits();
    if (accept('/')) {
      const std::string den = digits();
      return parse_scalar(num + "/" + den);
    }
    return parse_scalar(num);
  }

  /// 'e' digit -> unit index
  int unit(int max_index) {
    if (!accept('e')) throw std::invalid_argument("parse: expected unit 'e<k>'");
    const std::string d = digits();
    const int idx = std::stoi(d);
    if (idx < 1 || idx > max_index) {
      throw std::invalid_argument("parse: unit index e" + d + " out of range");
    }
    return idx;
  }

  bool at_digit() {
    const char c = peek();
    return c >= '0' && c <= '9';
  }

 private:
  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    if (out.empty()) throw std::invalid_argument("parse: expected digits");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// expr := ['+'|'-'] term (('+'|'-') term)*, term := rational ['e' k] | 'e' k
void parse_terms(Cursor& cur, Scalar* coeffs, int count) {
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("parse: expected '+' or '-' between terms");
    }
    first = false;
    Scalar coeff = 1;
    bool have_coeff = false;
    if (cur.at_digit()) {
      coeff = cur.rational();
      have_coeff = true;
    }
    int idx = 0;
    if (cur.peek() == 'e') {
      idx = cur.unit(count - 1);
    } else if (!have_coeff) {
      throw std::invalid_argument("parse: expected a rational or a unit");
    }
    if (sign < 0) coeff = -coeff;
    coeffs[idx] += coeff;
  }
}

}  // namespace

std::string to_string(const Quaternion& q) {
  const Scalar coeffs[4] = {q.w, q.x, q.y, q.z};
  return render_terms(coeffs, 4);
}

std::string to_string(const Octonion& o) { return render_terms(o.c.data(), 8); }

Quaternion parse_quaternion(std::string_view text) {
  Cursor cur(text);
  Scalar coeffs[4];
  parse_terms(cur, coeffs, 4);
  return {coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
}

Octonion parse_octonion(std::string_view text) {
  Cursor cur(text);
  Octonion o;
  parse_terms(cur, o.c.data(), 8);
  return o;
}

std::string to_string(const BarredQuaternion& op) {
  std::string out;
  for (int m = 0; m < 4; ++m) {
    if (op.c[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(op.c[m]) + ")";
    if (m > 0) out += "|e" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

BarredQuaternion parse_barred_quaternion(std::string_view text) {
  // Either a bare quaternion expression (no parentheses: q0 slot), or signed
  // parenthesized groups "(q)" / "(q)|e<m>".
  if (text.find('(') == std::string_view::npos) {
    return BarredQuaternion::from_left(parse_quaternion(text));
  }
  Cursor cur(text);
  BarredQuaternion out;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("parse: expected '+' or '-' between barred terms");
    }
    first = false;
    if (!cur.accept('(')) throw std::invalid_argument("parse: expected '('");
    std::string inner;
    int depth = 1;
    while (depth > 0) {
      const char c = cur.take();
      if (c == '(') ++depth;
      if (c == ')') {
        --depth;
        if (depth == 0) break;
      }
      inner += c;
    }
    Quaternion q = parse_quaternion(inner);
    if (sign < 0) q = -q;
    int slot = 0;
    if (cur.accept('|')) slot = cur.unit(3);
    out.c[static_cast<std::size_t>(slot)] = out.c[static_cast<std::size_t>(slot)] + q;
  }
  return out;
}

std::string to_csv(const RealMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << to_string(m.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const ComplexMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << to_string(m.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

namespace {

template <typename M, typename F>
std::string aligned_table(const M& m, F&& cell) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<std::size_t> width;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r].resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = cell(r, c);
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], cells[r][c].size());
    }
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace

std::string to_text(const RealMatrix& m) {
  return aligned_table(m, [&](std::size_t r, std::size_t c) { return to_string(m.at(r, c)); });
}

std::string to_text(const ComplexMatrix& m) {
  return aligned_table(m, [&](std::size_t r, std::size_t c) { return to_string(m.at(r, c)); });
}

}  // namespace hypalg
