#pragma once

#include <vector>

#include "mvcheb/poly.hpp"
#include "mvcheb/rational.hpp"

namespace mvcheb {

/// Laurent polynomial over Q(i) in one unit variable (e^{it} or w).
/// First and last stored coefficients are nonzero unless the value is zero.
class LaurentPoly {
 public:
  LaurentPoly() : min_(0) {}
  LaurentPoly(long minExp, std::vector<GaussianRational> coeffs)
      : min_(minExp), c_(std::move(coeffs)) {
    trim();
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return term(0, GaussianRational(1)); }
  static LaurentPoly term(long exp, GaussianRational coeff);
  /// p evaluated at the unit variable itself (embeds Poly, exponents >= 0).
  static LaurentPoly from_poly(const Poly& p);
  /// p((z + z^-1)/2): substitute cos t for the polynomial variable.
  static LaurentPoly cos_subst(const Poly& p);
  /// (z - z^-1)/(2i) = sin t.
  static LaurentPoly sin_t();

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return min_; }
  long max_exp() const { return min_ + static_cast<long>(c_.size()) - 1; }
  GaussianRational coeff(long exp) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend LaurentPoly operator*(const LaurentPoly& a, const GaussianRational& s);
  friend LaurentPoly operator*(const GaussianRational& s, const LaurentPoly& a) { return a * s; }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_ == b.min_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(int e) const;
  /// d/dw of sum c_k w^k.
  LaurentPoly derivative() const;

  std::string str() const;

 private:
  void trim();
  long min_;
  std::vector<GaussianRational> c_;
};

}  // namespace mvcheb
