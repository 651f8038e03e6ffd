#pragma once

#include <utility>
#include <vector>

#include "mvcheb/integrate.hpp"
#include "mvcheb/matpoly.hpp"
#include "mvcheb/rational.hpp"

namespace mvcheb::weight {

/// The matrix weight on [-1,1] of size (twoL+1) x (twoL+1); half-integers
/// are carried as the integer twoL = 2*ell.
struct WeightSpec {
  int twoL = 0;
  int dim() const { return twoL + 1; }
};

/// W = sqrt(1-x^2) * L * T * L^t with L unipotent lower triangular and the
/// k-th diagonal entry of T equal to tdiag[k].first * (1-x^2)^k.
struct WeightFactorization {
  MatPoly L;
  std::vector<std::pair<Rational, int>> tdiag;
  MatPoly polynomialPart;
};

/// alpha_t(m,n) of the weight's Chebyshev expansion; zero whenever the
/// Pochhammer factor (n-2l)_{m-t} vanishes.
Rational alpha_coeff(const WeightSpec& spec, int m, int n, int t);

/// The polynomial part What with W(x) = sqrt(1-x^2) * What(x).
MatPoly weight_poly(const WeightSpec& spec);

/// Unipotent lower-triangular factor: L_{mk} = m!(2k+1)!/((m+k+1)!k!) C^{(k+1)}_{m-k}.
MatPoly lower_L(const WeightSpec& spec);

/// Diagonal factor as (c_k(l), k) pairs, meaning c_k (1-x^2)^k.
std::vector<std::pair<Rational, int>> diag_T(const WeightSpec& spec);

/// Closed-form beta_k(m,n) relating the L T L^t expansion to the weight.
Rational beta_closed(int twoL, int m, int n, int k);

WeightFactorization factorization(const WeightSpec& spec);

/// What == L * diag(c_k (1-x^2)^k) * L^t, exactly.
bool verify_ldu(const WeightSpec& spec);

struct DetResult {
  Rational constant;   // prod_k c_k(l)
  Rational exponent;   // 2 (l + 1/2)^2, as a half-integer-capable rational
  bool exponent_ok;    // det(What) matched constant * (1-x^2)^(exponent - (2l+1)/2)
};

/// Determinant of the full weight, tracked as constant * (1-x^2)^exponent.
DetResult det_weight(const WeightSpec& spec);

/// W == sqrt(1-x^2) (J L J)(J T J)(J L J)^t with J the antidiagonal involution.
bool udl_check(const WeightSpec& spec);

/// Gegenbauer-Chebyshev integral vs the closed Racah-polynomial value for
/// t <= m; for m < t the integral must vanish (degree argument).
bool racah_integral_check(int k, int t, int m, int n);

/// Fourier expansion: the k-sum of 2F1 factors equals the binomial
/// quintuple sum, as Laurent polynomials in e^{it}.
bool cg_fourier_check(const WeightSpec& spec, int n, int m);

/// Integral of (1-x)^p W(x) dx, exact entrywise.
PiMat generalized_moment(const WeightSpec& spec, int p);

/// Closed hypergeometric-collapsed form of the same moment.
PiMat generalized_moment_closed(const WeightSpec& spec, int p);

/// Exact positive-definiteness of What(x0) via leading principal minors.
bool positive_definite_at(const WeightSpec& spec, const Rational& x0);

}  // namespace mvcheb::weight
