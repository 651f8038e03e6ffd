#pragma once

#include <vector>

#include "mvcheb/poly.hpp"
#include "mvcheb/ratmat.hpp"

namespace mvcheb::mhyp {

/// Structure matrices (C_a, U_a, V_a) of the matrix hypergeometric equation
/// u(1-u) p'' + p'(C_a - u U_a) - p (V_a + lambda) = 0 satisfied by the rows
/// of R_n. C_a is tridiagonal (triangular at a = +-2l); U_a, V_a diagonal.
struct StructureTriple {
  RatMat C, U, V;
  Rational alpha;
  int twoL = 0;
};

/// Requires twoL >= 1 whenever alpha != 0 (the first-order operator divides by l).
StructureTriple structure_matrices(int twoL, const Rational& alpha);

/// Matrix Pochhammer brackets [C^t, U^t, V^t + lambda]_0..N of the 2H1 series.
struct BracketSeq {
  StructureTriple triple;
  Rational shift;                // the lambda added to V
  std::vector<RatMat> brackets;  // brackets[0] = I
};

/// brackets[i+1] = (C^t + i)^{-1} (i^2 + i(U^t - 1) + V^t + lambda) brackets[i].
/// Throws with the offending index when some C^t + i is singular.
BracketSeq bracket_seq(const StructureTriple& triple, const Rational& lambda, int N);

/// lambda_j^alpha(n): the j-th diagonal entry of Lambda_n(D) + alpha Lambda_n(E).
Rational eigenvalue_lambda(int twoL, const Rational& alpha, int j, int n);

/// True iff the lambda_j^alpha(n) are pairwise distinct over {0..twoL} x {0..nMax}.
bool degeneracy_check(int twoL, const Rational& alpha, int nMax);

/// The i-th row of R_n from the terminating matrix 2H1 series at parameter alpha.
std::vector<Poly> row_via_2h1(int twoL, const Rational& alpha, int n, int i);

/// Krawtchouk eigenvectors of C_alpha: for each x in {0..twoL} the vector
/// v_m = K_m(x; (2l+alpha)/(4l), 2l) satisfies C_alpha v = (3/2 + x) v.
/// At alpha = +-2l the spectrum is read off the triangular diagonal instead.
bool krawtchouk_eigencheck(int twoL, const Rational& alpha);

}  // namespace mvcheb::mhyp
