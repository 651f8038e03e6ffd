#pragma once

#include <vector>

#include "mvcheb/rational.hpp"

namespace mvcheb {

/// Dense univariate polynomial over Rational. Trailing zeros are trimmed;
/// the zero polynomial stores no coefficients and reports degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(Rational(1)); }
  static Poly constant(Rational v);
  static Poly x() { return monomial(1, Rational(1)); }
  static Poly monomial(int deg, Rational coeff);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(long k) const {
    return (k < 0 || k >= static_cast<long>(c_.size())) ? Rational(0) : c_[k];
  }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Rational& r);
  friend Poly operator*(const Rational& r, const Poly& a) { return a * r; }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  /// p(c0 + c1*t) as a polynomial in t.
  Poly compose_affine(const Rational& c0, const Rational& c1) const;
  Poly pow(int e) const;

  Rational eval(const Rational& v) const;
  double eval_double(double v) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace mvcheb
