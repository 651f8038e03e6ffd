#include "mvcheb/poly.hpp"

#include <algorithm>

namespace mvcheb {

Poly Poly::constant(Rational v) {
  Poly p;
  if (!v.is_zero()) p.c_ = {std::move(v)};
  return p;
}

Poly Poly::monomial(int deg, Rational coeff) {
  Poly p;
  if (!coeff.is_zero()) {
    p.c_.assign(deg + 1, Rational(0));
    p.c_[deg] = std::move(coeff);
  }
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Rational& r) {
  if (r.is_zero()) return Poly();
  Poly p = a;
  for (auto& c : p.c_) c *= r;
  return p;
}

Poly Poly::derivative() const {
  Poly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  r.trim();
  return r;
}

Poly Poly::compose_affine(const Rational& c0, const Rational& c1) const {
  // Horner in (c0 + c1*t).
  Poly t = Poly::constant(c0) + Poly::monomial(1, c1);
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + Poly::constant(*it);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = Poly::one();
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Rational Poly::eval(const Rational& v) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

double Poly::eval_double(double v) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + it->to_double();
  return r;
}

}  // namespace mvcheb
