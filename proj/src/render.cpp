#include "mvcheb/render.hpp"

#include <cstdio>
#include <stdexcept>

namespace mvcheb::render {

std::string poly_to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = a.is_one() && k > 0;
    if (!unit) out += a.str();
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly poly_parse(std::string_view s, char var) {
  Poly result;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("poly_parse: empty input");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (!first || s[i] == '+' || s[i] == '-') {
      if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
        throw std::invalid_argument("poly_parse: expected sign");
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // coefficient (optional when the term starts with the variable)
    Rational coeff(1);
    size_t numStart = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > numStart) coeff = Rational::parse(s.substr(numStart, i - numStart));
    long deg = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t expStart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == expStart) throw std::invalid_argument("poly_parse: missing exponent");
        deg = std::stol(std::string(s.substr(expStart, i - expStart)));
      }
    } else if (i == numStart) {
      throw std::invalid_argument("poly_parse: expected term");
    }
    result += Poly::monomial(static_cast<int>(deg), coeff * Rational(sign));
    skip_ws();
  }
  return result;
}

std::string ratmat_to_string(const RatMat& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m.at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

std::string double_to_string(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace mvcheb::render
