#include "mvcheb/special.hpp"

#include <optional>
#include <stdexcept>

namespace mvcheb::special {

namespace {

// Least n >= 0 with a numerator parameter equal to -n; nullopt when the
// series does not terminate.
std::optional<long> termination_index(const std::vector<Rational>& num) {
  std::optional<long> best;
  for (const auto& a : num) {
    if (a.is_integer() && a.sign() <= 0) {
      long n = static_cast<long>(-a.num());
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

void check_denominators(const std::vector<Rational>& den, long N) {
  for (const auto& d : den)
    if (d.is_integer() && d.sign() <= 0) {
      long hit = static_cast<long>(-d.num());  // (d)_i contains factor d+hit = 0
      if (hit <= N - 1)
        throw std::domain_error("hyp_terminating: denominator parameter vanishes before termination");
    }
}

}  // namespace

Rational hyp_terminating(const HypSeriesSpec& spec) {
  auto N = termination_index(spec.numeratorParams);
  if (!N) throw std::domain_error("hyp_terminating: series does not terminate");
  check_denominators(spec.denominatorParams, *N);
  Rational sum(0), term(1);
  for (long j = 0; j <= *N; ++j) {
    sum += term;
    if (j < *N) {
      Rational ratio(1);
      for (const auto& a : spec.numeratorParams) ratio *= a + Rational(j);
      for (const auto& b : spec.denominatorParams) ratio /= b + Rational(j);
      term = term * ratio * spec.argument / Rational(j + 1);
    }
  }
  return sum;
}

Poly hyp_poly(const std::vector<Rational>& num, const std::vector<Rational>& den,
              const Poly& arg) {
  auto N = termination_index(num);
  if (!N) throw std::domain_error("hyp_poly: series does not terminate");
  check_denominators(den, *N);
  Poly sum, argpow = Poly::one();
  Rational term(1);
  for (long j = 0; j <= *N; ++j) {
    sum += argpow * term;
    if (j < *N) {
      Rational ratio(1);
      for (const auto& a : num) ratio *= a + Rational(j);
      for (const auto& b : den) ratio /= b + Rational(j);
      term = term * ratio / Rational(j + 1);
      argpow *= arg;
    }
  }
  return sum;
}

Poly chebyshev_u(int r) {
  if (r < 0) throw std::invalid_argument("chebyshev_u: negative degree");
  // U_r(x) = (r+1) 2F1(-r, r+2; 3/2; (1-x)/2)
  Poly half1mx = Poly::constant(Rational(1, 2)) + Poly::monomial(1, Rational(-1, 2));
  return Rational(r + 1) * hyp_poly({Rational(-r), Rational(r + 2)}, {Rational(3, 2)}, half1mx);
}

Poly gegenbauer(const Rational& alpha, int n) {
  if (!(alpha > Rational(0))) throw std::invalid_argument("gegenbauer: alpha must be positive");
  if (n < 0) throw std::invalid_argument("gegenbauer: negative degree");
  Poly half1mx = Poly::constant(Rational(1, 2)) + Poly::monomial(1, Rational(-1, 2));
  Rational pref = Rational::pochhammer(Rational(2) * alpha, n) / Rational::factorial(n);
  return pref * hyp_poly({Rational(-n), Rational(n) + Rational(2) * alpha},
                         {alpha + Rational(1, 2)}, half1mx);
}

Rational racah(int k, int t, const Rational& a, const Rational& b, const Rational& g,
               const Rational& d) {
  HypSeriesSpec s;
  s.numeratorParams = {Rational(-k), Rational(k) + a + b + Rational(1), Rational(-t),
                       Rational(t) + g + d + Rational(1)};
  s.denominatorParams = {a + Rational(1), b + d + Rational(1), g + Rational(1)};
  s.argument = Rational(1);
  return hyp_terminating(s);
}

Rational hahn(int k, int j, const Rational& a, const Rational& b, int N) {
  if (k > N) throw std::invalid_argument("hahn: degree exceeds N");
  HypSeriesSpec s;
  s.numeratorParams = {Rational(-k), Rational(k) + a + b + Rational(1), Rational(-j)};
  s.denominatorParams = {a + Rational(1), Rational(-N)};
  s.argument = Rational(1);
  return hyp_terminating(s);
}

Rational krawtchouk(int n, int x, const Rational& p, int N) {
  if (n > N || x > N) throw std::invalid_argument("krawtchouk: index exceeds N");
  if (p.is_zero()) throw std::invalid_argument("krawtchouk: p must be nonzero");
  HypSeriesSpec s;
  s.numeratorParams = {Rational(-n), Rational(-x)};
  s.denominatorParams = {Rational(-N)};
  s.argument = Rational(1) / p;
  return hyp_terminating(s);
}

std::vector<Rational> gegenbauer_connection(const Rational& gamma, const Rational& beta, int n) {
  if (!(gamma > Rational(0)) || !(beta > Rational(0)))
    throw std::invalid_argument("gegenbauer_connection: parameters must be positive");
  std::vector<Rational> c;
  for (int k = 0; 2 * k <= n; ++k) {
    Rational v = Rational::pochhammer(gamma - beta, k) * Rational::pochhammer(gamma, n - k) /
                 (Rational::factorial(k) * Rational::pochhammer(beta + Rational(1), n - k)) *
                 ((beta + Rational(n - 2 * k)) / beta);
    c.push_back(v);
  }
  return c;
}

std::vector<Rational> gegenbauer_linearize(const Rational& alpha, int n, int m) {
  if (!(alpha > Rational(0)))
    throw std::invalid_argument("gegenbauer_linearize: alpha must be positive");
  std::vector<Rational> c;
  for (int k = 0; k <= std::min(n, m); ++k) {
    Rational v = (Rational(n + m - 2 * k) + alpha) * Rational::factorial(n + m - 2 * k) *
                 Rational::pochhammer(alpha, k) /
                 ((Rational(n + m - k) + alpha) * Rational::factorial(k));
    v *= Rational::pochhammer(alpha, n - k) * Rational::pochhammer(alpha, m - k) *
         Rational::pochhammer(Rational(2) * alpha, n + m - k) /
         (Rational::factorial(n - k) * Rational::factorial(m - k) *
          Rational::pochhammer(alpha, n + m - k) *
          Rational::pochhammer(Rational(2) * alpha, n + m - 2 * k));
    c.push_back(v);
  }
  return c;
}

bool hahn_fourier_check(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("hahn_fourier_check: need 0 <= k <= n");
  // (-i)^k
  GaussianRational mik(1);
  for (int j = 0; j < k; ++j) mik *= GaussianRational(Rational(0), Rational(-1));
  Rational pref = Rational::pochhammer(Rational(n + 1), k + 1) * Rational::factorial(n - k) /
                  (Rational(2).pow(k) * Rational::pochhammer(Rational(3, 2), k) *
                   Rational::pochhammer(Rational(2 * k + 2), n - k));
  LaurentPoly lhs = LaurentPoly::sin_t().pow(k) * LaurentPoly::cos_subst(gegenbauer(Rational(k + 1), n - k));
  lhs = lhs * (mik * GaussianRational(pref));

  // e^{-int} (1 - e^{2it})^k 2F1(k-n, k+1; -n; e^{2it})
  LaurentPoly z2 = LaurentPoly::term(2, GaussianRational(1));
  LaurentPoly f21;
  {
    long N = n - k;
    LaurentPoly pow = LaurentPoly::one();
    Rational term(1);
    for (long j = 0; j <= N; ++j) {
      f21 += pow * GaussianRational(term);
      if (j < N) {
        term = term * (Rational(k - n + j) * Rational(k + 1 + j)) /
               (Rational(-n + j) * Rational(j + 1));
        pow *= z2;
      }
    }
  }
  LaurentPoly rhs = LaurentPoly::term(-n, GaussianRational(1)) *
                    (LaurentPoly::one() - z2).pow(k) * f21;
  return lhs == rhs;
}

bool racah_sum_check(int twoL, int n, int m, int k) {
  if (!(0 <= k && k <= m && m <= n && n <= twoL))
    throw std::invalid_argument("racah_sum_check: need 0 <= k <= m <= n <= twoL");
  Rational l = Rational(twoL, 2);
  Rational sum(0);
  for (int t = 0; t <= m; ++t) {
    Rational f = Rational(t % 2 ? -1 : 1) *
                 Rational::pochhammer(Rational(n) - Rational(2) * l, m - t) /
                 Rational::pochhammer(Rational(n + 2), m - t) *
                 Rational::pochhammer(Rational(2) * l + Rational(2 - t), t) /
                 Rational::factorial(t) * Rational(m + n + 1 - 2 * t);
    sum += f * racah(k, t, Rational(0), Rational(0), Rational(-m - 1), Rational(-n - 1));
  }
  Rational rhs = Rational((m + k) % 2 ? -1 : 1) * Rational::factorial(twoL + k + 1) *
                 Rational::factorial(twoL - k) / Rational::factorial(twoL + 1) *
                 Rational(n + 1) / (Rational::factorial(m) * Rational::factorial(twoL - m));
  return sum == rhs;
}

Rational beta_via_racah(int twoL, int m, int n, int k) {
  if (!(0 <= k && k <= m && m <= n && n <= twoL))
    throw std::invalid_argument("beta_via_racah: need 0 <= k <= m <= n <= twoL");
  Rational l = Rational(twoL, 2);
  // C_k(m,n) = sqrt(pi) Gamma(k+3/2) / (k+1) * ... ; sqrt(pi)Gamma(k+3/2) = pi (2k+2)!/(4^{k+1}(k+1)!)
  Rational sqrtpi_gamma = Rational::factorial(2 * k + 2) /
                          (Rational(4).pow(k + 1) * Rational::factorial(k + 1));
  Rational Ck = sqrtpi_gamma / Rational(k + 1) * Rational::pochhammer(Rational(k + 1), m - k) /
                Rational::factorial(m - k) * Rational::pochhammer(Rational(k + 1), n - k) /
                Rational::factorial(n - k) * Rational(k % 2 ? -1 : 1) *
                Rational::pochhammer(Rational(2 * k + 2), m + n - 2 * k) *
                Rational::factorial(k + 1) / Rational::factorial(n + m + 1);
  // The pi in C_k cancels the pi/2 carried by the alpha-side sum.
  Rational sum(0);
  for (int t = 0; t <= m; ++t) {
    Rational alpha_t = (Rational(2) * l + Rational(1)) / Rational(n + 1) *
                       Rational::factorial(twoL - m) * Rational::factorial(m) /
                       Rational::factorial(twoL) * Rational((m - t) % 2 ? -1 : 1) *
                       Rational::pochhammer(Rational(n) - Rational(2) * l, m - t) /
                       Rational::pochhammer(Rational(n + 2), m - t) *
                       Rational::pochhammer(Rational(2) * l + Rational(2 - t), t) /
                       Rational::factorial(t);
    sum += Rational(m + n + 1 - 2 * t) *
           racah(k, t, Rational(0), Rational(0), Rational(-m - 1), Rational(-n - 1)) * alpha_t;
  }
  sum = sum * Rational(1, 2);  // the pi/2, with pi cancelled against C_k
  return sum / Ck * Rational(2 * k + 1) / (Rational(n + 1) * Rational(m + 1)) *
         Rational::pochhammer(Rational(-m), k) * Rational::pochhammer(Rational(-n), k) /
         (Rational::pochhammer(Rational(m + 2), k) * Rational::pochhammer(Rational(n + 2), k));
}

}  // namespace mvcheb::special
