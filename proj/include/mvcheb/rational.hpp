#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvcheb {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  static Rational parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(nocheck{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Exact integer power, e >= 0 (or e < 0 for nonzero values).
  Rational pow(long long e) const;

  double to_double() const;
  std::string str() const;

  /// (a)_n = a(a+1)...(a+n-1), by direct product; (a)_0 = 1.
  static Rational pochhammer(const Rational& a, long long n);
  static Rational factorial(long long n);
  static Rational binomial(long long n, long long k);

 private:
  struct nocheck {};
  Rational(nocheck, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  BigInt num_, den_;
};

/// An exact rational multiple of pi. Sums of PiRationals and products by
/// Rational stay in the type; there is deliberately no Rational+PiRational.
struct PiRational {
  Rational coeff;

  PiRational() = default;
  explicit PiRational(Rational c) : coeff(std::move(c)) {}

  bool is_zero() const { return coeff.is_zero(); }
  PiRational operator-() const { return PiRational(-coeff); }
  friend PiRational operator+(const PiRational& a, const PiRational& b) {
    return PiRational(a.coeff + b.coeff);
  }
  friend PiRational operator-(const PiRational& a, const PiRational& b) {
    return PiRational(a.coeff - b.coeff);
  }
  friend PiRational operator*(const PiRational& a, const Rational& r) {
    return PiRational(a.coeff * r);
  }
  friend PiRational operator*(const Rational& r, const PiRational& a) { return a * r; }
  friend bool operator==(const PiRational& a, const PiRational& b) { return a.coeff == b.coeff; }
  friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

  double to_double() const;
  std::string str() const;
};

/// Element of Q(i).
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::string str() const;
};

}  // namespace mvcheb
