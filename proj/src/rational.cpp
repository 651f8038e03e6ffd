#include "mvcheb/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace mvcheb {

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("Rational::parse: bad input '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto parse_int = [&](std::string_view t) -> BigInt {
    if (t.empty()) bad();
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') i = 1;
    if (i == t.size()) bad();
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') bad();
    return BigInt(std::string(t));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rational Rational::pow(long long e) const {
  if (e < 0) {
    if (num_ == 0) throw std::domain_error("Rational::pow: zero to negative power");
    return (Rational(1) / *this).pow(-e);
  }
  Rational r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

double Rational::to_double() const {
  using boost::multiprecision::cpp_rational;
  return static_cast<double>(cpp_rational(num_, den_));
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::pochhammer(const Rational& a, long long n) {
  Rational r(1);
  for (long long i = 0; i < n; ++i) r *= a + Rational(i);
  return r;
}

Rational Rational::factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

Rational Rational::binomial(long long n, long long k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return Rational(r);
}

double PiRational::to_double() const {
  return coeff.to_double() * 3.14159265358979323846264338327950288;
}

std::string PiRational::str() const {
  if (coeff.is_zero()) return "0";
  return coeff.str() + "·pi";
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s = re.str() + (im.sign() > 0 ? "+" : "");
  s += im.str() + "i";
  return s;
}

}  // namespace mvcheb
