#include "mvcheb/laurent.hpp"

#include <algorithm>

namespace mvcheb {

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    min_ = 0;
    return;
  }
  size_t tail = c_.size();
  while (tail > lead && c_[tail - 1].is_zero()) --tail;
  if (lead > 0 || tail < c_.size()) {
    c_ = std::vector<GaussianRational>(c_.begin() + lead, c_.begin() + tail);
    min_ += static_cast<long>(lead);
  }
}

LaurentPoly LaurentPoly::term(long exp, GaussianRational coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) {
    p.min_ = exp;
    p.c_ = {std::move(coeff)};
  }
  return p;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) {
  LaurentPoly r;
  for (long k = 0; k <= p.degree(); ++k)
    r += term(k, GaussianRational(p.coeff(k)));
  return r;
}

LaurentPoly LaurentPoly::cos_subst(const Poly& p) {
  LaurentPoly cosz = term(1, GaussianRational(Rational(1, 2))) +
                     term(-1, GaussianRational(Rational(1, 2)));
  LaurentPoly r;
  for (long k = p.degree(); k >= 0; --k)
    r = r * cosz + term(0, GaussianRational(p.coeff(k)));
  return r;
}

LaurentPoly LaurentPoly::sin_t() {
  // (z - 1/z) / (2i) = -i/2 z + i/2 z^-1
  return term(1, GaussianRational(Rational(0), Rational(-1, 2))) +
         term(-1, GaussianRational(Rational(0), Rational(1, 2)));
}

GaussianRational LaurentPoly::coeff(long exp) const {
  long idx = exp - min_;
  if (idx < 0 || idx >= static_cast<long>(c_.size())) return GaussianRational();
  return c_[idx];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.min_, b.min_);
  long hi = std::max(a.max_exp(), b.max_exp());
  LaurentPoly r;
  r.min_ = lo;
  r.c_.assign(hi - lo + 1, GaussianRational());
  for (long e = a.min_; e <= a.max_exp(); ++e) r.c_[e - lo] += a.coeff(e);
  for (long e = b.min_; e <= b.max_exp(); ++e) r.c_[e - lo] += b.coeff(e);
  r.trim();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.min_ = a.min_ + b.min_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const GaussianRational& s) {
  if (s.is_zero()) return LaurentPoly();
  LaurentPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  LaurentPoly r = one();
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (long e = min_; e <= max_exp(); ++e) {
    GaussianRational c = coeff(e);
    if (!c.is_zero() && e != 0) r += term(e - 1, c * GaussianRational(Rational(e)));
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (long e = max_exp(); e >= min_; --e) {
    GaussianRational c = coeff(e);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (e != 0) s += "z^" + std::to_string(e);
  }
  return s;
}

}  // namespace mvcheb
