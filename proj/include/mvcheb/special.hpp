#pragma once

#include <vector>

#include "mvcheb/laurent.hpp"
#include "mvcheb/poly.hpp"
#include "mvcheb/rational.hpp"

namespace mvcheb::special {

/// A terminating generalized hypergeometric series pFq(num; den; z).
/// At least one numerator parameter must be a non-positive integer; no
/// denominator parameter may hit a non-positive integer before the
/// termination index.
struct HypSeriesSpec {
  std::vector<Rational> numeratorParams;
  std::vector<Rational> denominatorParams;
  Rational argument;
};

/// Exact value of the terminating series, by the term-ratio recurrence.
Rational hyp_terminating(const HypSeriesSpec& spec);

/// Terminating pFq with a polynomial argument, expanded exactly.
Poly hyp_poly(const std::vector<Rational>& num, const std::vector<Rational>& den,
              const Poly& arg);

/// Chebyshev polynomial of the second kind U_r; degree r, leading coeff 2^r.
Poly chebyshev_u(int r);

/// Gegenbauer (ultraspherical) polynomial C_n^{(alpha)}, alpha > 0.
Poly gegenbauer(const Rational& alpha, int n);

/// Racah polynomial R_k(lambda(t); a, b, g, d) evaluated exactly.
Rational racah(int k, int t, const Rational& a, const Rational& b, const Rational& g,
               const Rational& d);

/// Hahn polynomial Q_k(j; a, b, N), k <= N.
Rational hahn(int k, int j, const Rational& a, const Rational& b, int N);

/// Krawtchouk polynomial K_n(x; p, N) = 2F1(-n, -x; -N; 1/p), n, x <= N.
Rational krawtchouk(int n, int x, const Rational& p, int N);

/// Coefficients expressing C_n^{(gamma)} in the basis {C_{n-2k}^{(beta)}}.
std::vector<Rational> gegenbauer_connection(const Rational& gamma, const Rational& beta, int n);

/// Coefficients of C_{n+m-2k}^{(alpha)} in the product C_n^{(alpha)} C_m^{(alpha)}.
std::vector<Rational> gegenbauer_linearize(const Rational& alpha, int n, int m);

/// Fourier expansion of sin^k t C_{n-k}^{(k+1)}(cos t): checks that
/// (-i)^k (n+1)_{k+1} (n-k)! / (2^k (3/2)_k (2k+2)_{n-k}) sin^k t C^{(k+1)}_{n-k}(cos t)
/// equals e^{-int} (1-e^{2it})^k 2F1(k-n, k+1; -n; e^{2it}) as Laurent polynomials.
bool hahn_fourier_check(int k, int n);

/// Finite Racah summation: the t-sum against the weight-coefficient factors
/// equals (-1)^{m+k} (2l+k+1)!(2l-k)!(n+1) / ((2l+1)! m! (2l-m)!).
bool racah_sum_check(int twoL, int n, int m, int k);

/// beta_k(m,n) evaluated through the Racah-sum route; must match the closed
/// product formula used in the LDU factorization.
Rational beta_via_racah(int twoL, int m, int n, int k);

}  // namespace mvcheb::special
