#include "mvcheb/weight.hpp"

#include <stdexcept>

#include "mvcheb/laurent.hpp"
#include "mvcheb/special.hpp"

namespace mvcheb::weight {

using special::chebyshev_u;
using special::gegenbauer;
using special::racah;

Rational alpha_coeff(const WeightSpec& spec, int m, int n, int t) {
  if (!(0 <= m && m <= n && n <= spec.twoL && 0 <= t && t <= m))
    throw std::out_of_range("alpha_coeff: index out of range");
  Rational l(spec.twoL, 2);
  Rational v = Rational(spec.twoL + 1) / Rational(n + 1) *
               Rational::factorial(spec.twoL - m) * Rational::factorial(m) /
               Rational::factorial(spec.twoL);
  v *= Rational((m - t) % 2 ? -1 : 1) *
       Rational::pochhammer(Rational(n) - Rational(2) * l, m - t) /
       Rational::pochhammer(Rational(n + 2), m - t);
  v *= Rational::pochhammer(Rational(2) * l + Rational(2 - t), t) / Rational::factorial(t);
  return v;
}

MatPoly weight_poly(const WeightSpec& spec) {
  int d = spec.dim();
  MatPoly w(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m <= n; ++m) {
      Poly s;
      for (int t = 0; t <= m; ++t) {
        Rational a = alpha_coeff(spec, m, n, t);
        if (!a.is_zero()) s += a * chebyshev_u(n + m - 2 * t);
      }
      w.at(n, m) = s;
      w.at(m, n) = s;
    }
  return w;
}

MatPoly lower_L(const WeightSpec& spec) {
  int d = spec.dim();
  return MatPoly::from(d, d, [&](int m, int k) {
    if (k > m) return Poly::zero();
    Rational c = Rational::factorial(m) * Rational::factorial(2 * k + 1) /
                 (Rational::factorial(m + k + 1) * Rational::factorial(k));
    return c * gegenbauer(Rational(k + 1), m - k);
  });
}

std::vector<std::pair<Rational, int>> diag_T(const WeightSpec& spec) {
  std::vector<std::pair<Rational, int>> t;
  for (int k = 0; k <= spec.twoL; ++k) {
    Rational c = Rational(4).pow(k) * Rational::factorial(k).pow(4) * Rational(2 * k + 1) /
                 Rational::factorial(2 * k + 1).pow(2) *
                 Rational::factorial(spec.twoL + k + 1) * Rational::factorial(spec.twoL - k) /
                 Rational::factorial(spec.twoL).pow(2);
    t.emplace_back(c, k);
  }
  return t;
}

Rational beta_closed(int twoL, int m, int n, int k) {
  return Rational::factorial(m) / Rational::factorial(m + k + 1) * Rational::factorial(n) /
         Rational::factorial(n + k + 1) * Rational::factorial(k).pow(2) *
         Rational(2).pow(2 * k) * Rational(2 * k + 1) * Rational::factorial(twoL + k + 1) *
         Rational::factorial(twoL - k) / Rational::factorial(twoL).pow(2);
}

WeightFactorization factorization(const WeightSpec& spec) {
  return WeightFactorization{lower_L(spec), diag_T(spec), weight_poly(spec)};
}

namespace {

Poly one_minus_x2() {
  return Poly::one() - Poly::monomial(2, Rational(1));
}

MatPoly middle_T_poly(const WeightSpec& spec) {
  int d = spec.dim();
  auto t = diag_T(spec);
  MatPoly m(d, d);
  Poly w2 = one_minus_x2();
  for (int k = 0; k < d; ++k) m.at(k, k) = t[k].first * w2.pow(t[k].second);
  return m;
}

}  // namespace

bool verify_ldu(const WeightSpec& spec) {
  MatPoly l = lower_L(spec);
  return weight_poly(spec) == l * middle_T_poly(spec) * l.transpose();
}

DetResult det_weight(const WeightSpec& spec) {
  DetResult r;
  r.constant = Rational(1);
  for (const auto& [c, k] : diag_T(spec)) r.constant *= c;
  // Full exponent 2 (l + 1/2)^2 = (2l+1)^2 / 2; the polynomial part carries
  // exponent l (2l+1), the sqrt prefactor the remaining (2l+1)/2.
  r.exponent = Rational((spec.twoL + 1) * (spec.twoL + 1), 2);
  Poly det = matpoly_det(weight_poly(spec));
  long expected_poly_exp = static_cast<long>(spec.twoL) * (spec.twoL + 1) / 2;
  Poly expect = r.constant * one_minus_x2().pow(static_cast<int>(expected_poly_exp));
  Rational poly_part_exp(expected_poly_exp);
  r.exponent_ok = (det == expect) &&
                  (poly_part_exp + Rational(spec.twoL + 1, 2) == r.exponent);
  return r;
}

bool udl_check(const WeightSpec& spec) {
  MatPoly l = lower_L(spec).jconj();
  MatPoly t = middle_T_poly(spec).jconj();
  return weight_poly(spec) == l * t * l.transpose();
}

bool racah_integral_check(int k, int t, int m, int n) {
  if (!(0 <= k && k <= m && m <= n && 0 <= t && t <= n))
    throw std::invalid_argument("racah_integral_check: need 0 <= k <= m <= n and 0 <= t <= n");
  int r = n + m - 2 * t;
  if (r < 0) return t > m;  // U index below zero only in the vanishing regime
  Poly integrand = one_minus_x2().pow(k) * gegenbauer(Rational(k + 1), n - k) *
                   gegenbauer(Rational(k + 1), m - k) * chebyshev_u(r);
  PiRational lhs = integrate_halfcircle(integrand);
  if (t > m) return lhs.is_zero();
  // sqrt(pi) Gamma(k+3/2) = pi (2k+2)! / (4^{k+1} (k+1)!)
  Rational pref = Rational::factorial(2 * k + 2) / (Rational(4).pow(k + 1) * Rational::factorial(k + 1));
  pref = pref / Rational(k + 1) * Rational::pochhammer(Rational(k + 1), m - k) /
         Rational::factorial(m - k) * Rational::pochhammer(Rational(k + 1), n - k) /
         Rational::factorial(n - k) * Rational(k % 2 ? -1 : 1) *
         Rational::pochhammer(Rational(2 * k + 2), m + n - 2 * k) * Rational::factorial(k + 1) /
         Rational::factorial(n + m + 1);
  PiRational rhs{pref * racah(k, t, Rational(0), Rational(0), Rational(-n - 1), Rational(-m - 1))};
  return lhs == rhs;
}

bool cg_fourier_check(const WeightSpec& spec, int n, int m) {
  if (n < 0 || m < 0 || n > spec.twoL || m > spec.twoL)
    throw std::out_of_range("cg_fourier_check: index out of range");
  int twoL = spec.twoL;
  Rational l(twoL, 2);
  auto f21 = [&](int a, int b, int c) {
    // terminating 2F1(a, b; c; z^2) as Laurent in z
    LaurentPoly sum;
    LaurentPoly pow = LaurentPoly::one();
    LaurentPoly z2 = LaurentPoly::term(2, GaussianRational(1));
    Rational term(1);
    long N = -a;
    for (long j = 0; j <= N; ++j) {
      sum += pow * GaussianRational(term);
      if (j < N) {
        term = term * (Rational(a) + Rational(j)) * (Rational(b) + Rational(j)) /
               ((Rational(c) + Rational(j)) * Rational(j + 1));
        pow *= z2;
      }
    }
    return sum;
  };
  LaurentPoly lhs;
  LaurentPoly one_m_z2 = LaurentPoly::one() - LaurentPoly::term(2, GaussianRational(1));
  for (int k = 0; k <= std::min(m, n); ++k) {
    Rational coef = Rational(k % 2 ? -1 : 1) * Rational(2 * k + 1) *
                    Rational::pochhammer(Rational(m - k + 1), k) *
                    Rational::pochhammer(Rational(n - k + 1), k) /
                    (Rational::pochhammer(Rational(m + 1), k + 1) *
                     Rational::pochhammer(Rational(n + 1), k + 1)) *
                    Rational::factorial(twoL + k + 1) * Rational::factorial(twoL - k) /
                    Rational::factorial(twoL).pow(2);
    lhs += LaurentPoly::term(-(n + m), GaussianRational(coef)) * one_m_z2.pow(2 * k) *
           f21(k - n, k + 1, -n) * f21(k - m, k + 1, -m);
  }
  LaurentPoly rhs;
  for (int j = 0; j <= twoL; ++j)
    for (int j1 = 0; j1 <= n; ++j1) {
      int j2 = j - j1;
      if (j2 < 0 || j2 > twoL - n) continue;
      for (int i1 = 0; i1 <= m; ++i1) {
        int i2 = j - i1;
        if (i2 < 0 || i2 > twoL - m) continue;
        Rational coef = Rational::binomial(n, j1) * Rational::binomial(twoL - n, j2) /
                        Rational::binomial(twoL, j) * Rational::binomial(m, i1) *
                        Rational::binomial(twoL - m, i2) / Rational::binomial(twoL, j);
        rhs += LaurentPoly::term((n - j1 + j2) - (m - i1 + i2), GaussianRational(coef));
      }
    }
  return lhs == rhs;
}

PiMat generalized_moment(const WeightSpec& spec, int p) {
  if (p < 0) throw std::invalid_argument("generalized_moment: p must be non-negative");
  MatPoly w = weight_poly(spec);
  Poly onemx = Poly::one() - Poly::x();
  Poly factor = onemx.pow(p);
  return PiMat::from(spec.dim(), spec.dim(), [&](int i, int j) {
    return integrate_halfcircle(factor * w.at(i, j));
  });
}

PiMat generalized_moment_closed(const WeightSpec& spec, int p) {
  if (p < 0) throw std::invalid_argument("generalized_moment_closed: p must be non-negative");
  int twoL = spec.twoL;
  Rational l(twoL, 2);
  // 2^{p+2} Gamma(p+3/2) Gamma(3/2) / Gamma(p+3) = pi 2^{p+2} (2p+2)! / (2^{2p+3} (p+1)! (p+2)!)
  Rational gam = Rational(2).pow(p + 2) * Rational::factorial(2 * p + 2) /
                 (Rational(2).pow(2 * p + 3) * Rational::factorial(p + 1) *
                  Rational::factorial(p + 2));
  return PiMat::from(spec.dim(), spec.dim(), [&](int i, int j) {
    int n = std::max(i, j), m = std::min(i, j);
    Rational s(0);
    for (int t = 0; t <= m; ++t) {
      int r = n + m - 2 * t;
      s += Rational((m - t) % 2 ? -1 : 1) *
           Rational::pochhammer(Rational(n) - Rational(2) * l, m - t) /
           Rational::pochhammer(Rational(n + 2), m - t) *
           Rational::pochhammer(Rational(2) * l + Rational(2 - t), t) / Rational::factorial(t) *
           Rational(r + 1) * Rational::pochhammer(Rational(-p), r) /
           Rational::pochhammer(Rational(p + 3), r);
    }
    Rational pre = gam * Rational(twoL + 1) / Rational(n + 1) * Rational::factorial(twoL - m) *
                   Rational::factorial(m) / Rational::factorial(twoL);
    return PiRational{pre * s};
  });
}

bool positive_definite_at(const WeightSpec& spec, const Rational& x0) {
  RatMat w = weight_poly(spec).eval(x0);
  int d = spec.dim();
  for (int k = 1; k <= d; ++k) {
    RatMat minor_(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor_.at(i, j) = w.at(i, j);
    if (!(minor_.det() > Rational(0))) return false;
  }
  return true;
}

}  // namespace mvcheb::weight
