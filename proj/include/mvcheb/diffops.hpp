#pragma once

#include <vector>

#include "mvcheb/matpoly.hpp"
#include "mvcheb/ratmat.hpp"

namespace mvcheb::dop {

/// Right-acting matrix differential operator: (P . op)(x) = sum_i d^iP/dx^i coeffs[i](x).
/// coeffs[i] is the grid multiplying the i-th derivative from the right.
struct MatDiffOp {
  std::vector<MatPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int dim() const { return coeffs.empty() ? 0 : coeffs[0].rows(); }

  static MatDiffOp multiplication(const MatPoly& m) { return MatDiffOp{{m}}; }

  friend bool operator==(const MatDiffOp& a, const MatDiffOp& b);
  friend MatDiffOp operator+(const MatDiffOp& a, const MatDiffOp& b);
  friend MatDiffOp operator-(const MatDiffOp& a, const MatDiffOp& b);
  friend MatDiffOp operator*(const MatDiffOp& a, const Rational& s);
  bool is_zero() const;
  /// Transposed coefficient grids (right <-> left action swap).
  MatDiffOp transpose_coeffs() const;
  MatDiffOp jconj() const;
};

MatPoly apply_right(const MatPoly& p, const MatDiffOp& op);

/// Operator with (P . compose(a,b)) = ((P . a) . b) for all P.
MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b);

/// Second-order operator on [-1,1] with the monic P_n as eigenfunctions.
MatDiffOp build_Dtilde(int twoL);
/// First-order companion; no analogue at twoL = 0.
MatDiffOp build_Etilde(int twoL);
RatMat lambda_Dtilde(int twoL, int n);
RatMat lambda_Etilde(int twoL, int n);

/// u-domain pair on [0,1] and the combination D + alpha E.
MatDiffOp build_D(int twoL);
MatDiffOp build_E(int twoL);
MatDiffOp combine_D_alpha(int twoL, const Rational& alpha);
RatMat lambda_D(int twoL, int n);
RatMat lambda_E(int twoL, int n);

/// <P.op, Q>_W == <P, Q.op>_W for all monomial-basis pairs up to degMax.
bool symmetry_check(int twoL, const MatDiffOp& op, int degMax);

/// M(u) = L(1-2u), unipotent lower triangular.
MatPoly conj_M(int twoL);

/// M^{-1} op M, expanded symbolically; when op has order 2 its leading
/// symbol must be u(1-u) I.
MatDiffOp conjugate_by_M(int twoL, const MatDiffOp& op);

/// Diagonal operator expected from conjugating D - 2l E.
MatDiffOp script_D_expected(int twoL);
/// First-order operator expected from conjugating E (twoL >= 1).
MatDiffOp script_E_expected(int twoL);
RatMat lambda_scriptD(int twoL, int n);

/// N(lambda) = (lambda - T0) (T1/2)^{-1} S1(0) + S0(0), acting on row vectors
/// from the right.
RatMat n_lambda(int twoL, const Rational& lambda);

/// Coefficient rows c_{k,0..2l}(n) of R_n M by the forward three-term
/// recursion from the closed initial value c_{k,0}(n).
std::vector<Rational> c_recurrence(int twoL, int k, int n);

/// Closed Racah-form coefficient c_{kj}(n).
Rational c_closed(int twoL, int k, int j, int n);

/// R_n(u) M(u) entrywise equals c_{kj}(n) 2F1(j-k-n, n+k+j+2; j+3/2; u).
bool scriptR_factorization_check(int twoL, int n);

/// P_n(x) L(x) entrywise equals (-2)^n c_{kj}(n) (n+k-j)!/(2j+2)_{n+k-j} C^{(j+1)}_{n+k-j}(x).
bool scriptP_gegenbauer_check(int twoL, int n);

/// Orthogonality of the c-coefficients: the factorial-weighted j-sum equals
/// delta_nm (H_n)_kk 2^{-2n}, and the Racah-normalized variant equals
/// delta_nm (2l+1)(n+k+1)/(2l+1+n-k). Index combinations outside the finite
/// Racah system carry no constraint and pass vacuously.
bool c_orthogonality_check(int twoL, int n, int m, int k);

}  // namespace mvcheb::dop
