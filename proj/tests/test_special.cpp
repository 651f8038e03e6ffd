#include "doctest.h"
#include "mvcheb/integrate.hpp"
#include "mvcheb/special.hpp"

using namespace mvcheb;
using namespace mvcheb::special;

TEST_CASE("chebyshev_u against the three-term recurrence") {
  CHECK(chebyshev_u(0) == Poly::one());
  CHECK(chebyshev_u(1) == Poly::monomial(1, Rational(2)));
  CHECK(chebyshev_u(2) == Poly::monomial(2, Rational(4)) + Poly::constant(Rational(-1)));
  Poly um1 = chebyshev_u(0), u = chebyshev_u(1);
  Poly twox = Poly::monomial(1, Rational(2));
  for (int r = 2; r <= 12; ++r) {
    Poly next = twox * u - um1;
    CHECK(chebyshev_u(r) == next);
    CHECK(chebyshev_u(r).degree() == r);
    CHECK(chebyshev_u(r).leading() == Rational(2).pow(r));
    um1 = u;
    u = next;
  }
}

TEST_CASE("gegenbauer basics") {
  for (int n = 0; n <= 8; ++n) CHECK(gegenbauer(Rational(1), n) == chebyshev_u(n));
  CHECK(gegenbauer(Rational(2), 1) == Poly::monomial(1, Rational(4)));
  CHECK(gegenbauer(Rational(7, 3), 0) == Poly::one());
  CHECK_THROWS(gegenbauer(Rational(0), 1));
  CHECK_THROWS(gegenbauer(Rational(-1), 1));
}

TEST_CASE("gegenbauer derivative identity d/dx C_n^(a) = 2a C_{n-1}^(a+1)") {
  for (int a = 1; a <= 3; ++a)
    for (int n = 1; n <= 8; ++n)
      CHECK(gegenbauer(Rational(a), n).derivative() ==
            Rational(2 * a) * gegenbauer(Rational(a + 1), n - 1));
}

TEST_CASE("chebyshev orthogonality under the halfcircle weight") {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      PiRational v = integrate_halfcircle(chebyshev_u(n) * chebyshev_u(m));
      CHECK(v == (n == m ? PiRational{Rational(1, 2)} : PiRational{}));
    }
}

TEST_CASE("hyp_terminating") {
  HypSeriesSpec s;
  s.numeratorParams = {Rational(-1), Rational(3)};
  s.denominatorParams = {Rational(3, 2)};
  s.argument = Rational(1);
  CHECK(hyp_terminating(s) == Rational(-1));

  s.numeratorParams = {Rational(0), Rational(5, 7)};
  CHECK(hyp_terminating(s) == Rational(1));

  // polynomial variant: 2F1(-1, 3; 3/2; u) = 1 - 2u
  Poly f = hyp_poly({Rational(-1), Rational(3)}, {Rational(3, 2)}, Poly::x());
  CHECK(f == Poly::one() + Poly::monomial(1, Rational(-2)));

  // non-terminating rejected
  s.numeratorParams = {Rational(1, 2), Rational(3)};
  CHECK_THROWS(hyp_terminating(s));
  // denominator hits a non-positive integer before termination
  s.numeratorParams = {Rational(-3), Rational(2)};
  s.denominatorParams = {Rational(-1)};
  CHECK_THROWS(hyp_terminating(s));
}

TEST_CASE("racah frozen values") {
  CHECK(racah(0, 3, Rational(0), Rational(0), Rational(-4), Rational(-4)) == Rational(1));
  CHECK(racah(2, 0, Rational(0), Rational(0), Rational(-3), Rational(-3)) == Rational(1));
  // direct two-term sum: 1 + (-1)(2)(-1)(-2) / ((1)(-1)(-1) 1!) = 1 - 4
  CHECK(racah(1, 1, Rational(0), Rational(0), Rational(-2), Rational(-2)) == Rational(-3));
}

TEST_CASE("racah(k, .) is a polynomial of degree k in lambda(t)") {
  // Interpolate through k+1 nodes and confirm the remaining N-k nodes match.
  int n = 5, m = 4;  // parameters (0, 0, -n-1, -m-1), lattice t = 0..m
  Rational g = Rational(-n - 1), d = Rational(-m - 1);
  for (int k = 0; k <= m; ++k) {
    std::vector<Rational> lam, val;
    for (int t = 0; t <= m; ++t) {
      lam.push_back(Rational(t) * (Rational(t) + g + d + Rational(1)));
      val.push_back(racah(k, t, Rational(0), Rational(0), g, d));
    }
    // Newton interpolation on the first k+1 nodes.
    std::vector<Rational> coef = val;
    for (int j = 1; j <= k; ++j)
      for (int i = k; i >= j; --i)
        coef[i] = (coef[i] - coef[i - 1]) / (lam[i] - lam[i - j]);
    auto eval = [&](const Rational& z) {
      Rational r = coef[k];
      for (int i = k - 1; i >= 0; --i) r = r * (z - lam[i]) + coef[i];
      return r;
    };
    for (int t = 0; t <= m; ++t) CHECK(eval(lam[t]) == val[t]);
  }
}

TEST_CASE("hahn frozen values") {
  CHECK(hahn(0, 2, Rational(0), Rational(0), 3) == Rational(1));
  CHECK(hahn(2, 0, Rational(0), Rational(0), 3) == Rational(1));
  // direct two-term sum: 1 + (-1)(2)(-1)/((1)(-1) 1!) = 1 - 2
  CHECK(hahn(1, 1, Rational(0), Rational(0), 1) == Rational(-1));
  CHECK_THROWS(hahn(3, 0, Rational(0), Rational(0), 2));
}

TEST_CASE("krawtchouk frozen values") {
  CHECK(krawtchouk(0, 1, Rational(1, 2), 2) == Rational(1));
  CHECK(krawtchouk(1, 0, Rational(1, 2), 2) == Rational(1));
  CHECK(krawtchouk(1, 1, Rational(1, 2), 2) == Rational(0));
  CHECK_THROWS(krawtchouk(3, 0, Rational(1, 2), 2));
  CHECK_THROWS(krawtchouk(1, 1, Rational(0), 2));
}

TEST_CASE("gegenbauer connection re-sums to the source polynomial") {
  CHECK(gegenbauer_connection(Rational(3), Rational(2), 0) == std::vector<Rational>{Rational(1)});
  auto delta = gegenbauer_connection(Rational(2), Rational(2), 4);
  CHECK(delta[0] == Rational(1));
  for (size_t i = 1; i < delta.size(); ++i) CHECK(delta[i] == Rational(0));
  for (int gamma = 1; gamma <= 2; ++gamma)
    for (int beta = 1; beta <= 2; ++beta)
      for (int n = 0; n <= 6; ++n) {
        auto c = gegenbauer_connection(Rational(gamma), Rational(beta), n);
        Poly sum;
        for (size_t k = 0; k < c.size(); ++k)
          sum += c[k] * gegenbauer(Rational(beta), n - 2 * static_cast<int>(k));
        CHECK(sum == gegenbauer(Rational(gamma), n));
      }
}

TEST_CASE("gegenbauer linearization re-sums to the product") {
  auto c = gegenbauer_linearize(Rational(1), 1, 1);
  CHECK(c == std::vector<Rational>{Rational(1), Rational(1)});  // U1*U1 = U2 + U0
  CHECK(gegenbauer_linearize(Rational(3, 2), 5, 0) == std::vector<Rational>{Rational(1)});
  for (int a = 1; a <= 2; ++a)
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m) {
        auto cs = gegenbauer_linearize(Rational(a), n, m);
        Poly sum;
        for (size_t k = 0; k < cs.size(); ++k)
          sum += cs[k] * gegenbauer(Rational(a), n + m - 2 * static_cast<int>(k));
        CHECK(sum == gegenbauer(Rational(a), n) * gegenbauer(Rational(a), m));
      }
}

TEST_CASE("hahn fourier expansion check") {
  CHECK(hahn_fourier_check(0, 0));
  CHECK(hahn_fourier_check(0, 2));
  CHECK(hahn_fourier_check(1, 1));
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(hahn_fourier_check(k, n));
}

TEST_CASE("racah sum lemma") {
  CHECK(racah_sum_check(0, 0, 0, 0));
  CHECK(racah_sum_check(2, 2, 1, 1));
  CHECK(racah_sum_check(4, 3, 2, 0));
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int n = 0; n <= twoL; ++n)
      for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= m; ++k) CHECK(racah_sum_check(twoL, n, m, k));
  CHECK_THROWS(racah_sum_check(2, 3, 1, 0));
}

TEST_CASE("beta via racah frozen values") {
  // beta_0(0,0) = 2l+1
  for (int twoL = 0; twoL <= 4; ++twoL)
    CHECK(beta_via_racah(twoL, 0, 0, 0) == Rational(twoL + 1));
  CHECK(beta_via_racah(1, 1, 1, 1) == Rational(2));
  CHECK_THROWS(beta_via_racah(1, 1, 0, 0));
}

TEST_CASE("gegenbauer norm identity for integer parameter") {
  // int (1-x^2)^{a-1/2} C_n C_m = delta pi Gamma(n+2a) 2^{1-2a} / (Gamma(a)^2 (n+a) n!)
  for (int a = 1; a <= 3; ++a) {
    Poly w = (Poly::one() - Poly::monomial(2, Rational(1))).pow(a - 1);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 6; ++m) {
        PiRational v =
            integrate_halfcircle(w * gegenbauer(Rational(a), n) * gegenbauer(Rational(a), m));
        if (n != m) {
          CHECK(v.is_zero());
        } else {
          Rational norm = Rational::factorial(n + 2 * a - 1) * Rational(2).pow(1 - 2 * a) /
                          (Rational::factorial(a - 1).pow(2) * Rational(n + a) *
                           Rational::factorial(n));
          CHECK(v == PiRational{norm});
        }
      }
  }
}
