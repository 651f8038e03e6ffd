#pragma once

#include <vector>

#include "mvcheb/integrate.hpp"
#include "mvcheb/matpoly.hpp"
#include "mvcheb/ratmat.hpp"
#include "mvcheb/weight.hpp"

namespace mvcheb::mvop {

using weight::WeightSpec;

/// Tridiagonal coefficient X_n of u R_n = R_{n+1} + X_n R_n + Y_n R_{n-1}.
RatMat recurrence_X(const WeightSpec& spec, int n);

/// Diagonal coefficient Y_n; requires n >= 1.
RatMat recurrence_Y(const WeightSpec& spec, int n);

/// Monic family on [0,1], built iteratively from R_0 = I.
MatPoly monic_R(const WeightSpec& spec, int n);

/// Monic family on [-1,1]: P_n(x) = (-2)^n R_n((1-x)/2).
MatPoly monic_P(const WeightSpec& spec, int n);

/// The R_0..R_degreeMax sequence, shared across checks.
struct MonicPolySeq {
  WeightSpec spec;
  int degreeMax = 0;
  std::vector<MatPoly> polys;  // index = degree, u-domain
};
MonicPolySeq build_seq(const WeightSpec& spec, int degreeMax);

/// Matrix inner product int A W B^t dx over [-1,1], exact entrywise.
PiMat inner_product_W(const WeightSpec& spec, const MatPoly& A, const MatPoly& B);

/// Closed-form squared norm matrix H_n.
PiMat squared_norm_H(const WeightSpec& spec, int n);

struct LeadingCoeffs {
  RatMat Rn1;  // coefficient of u^{n-1} in R_n (tridiagonal)
  RatMat Rn2;  // coefficient of u^{n-2} in R_n (five-diagonal); n >= 2
};

/// Closed forms for the two sub-leading coefficient grids of R_n.
LeadingCoeffs leading_coeffs(const WeightSpec& spec, int n);

/// Recurrence coefficients from sub-leading coefficient grids:
/// X = R^n_{n-1} - R^{n+1}_n, Y = R^n_{n-2} - R^{n+1}_{n-1} - X R^n_{n-1}.
std::pair<RatMat, RatMat> coeffs_to_recurrence(const RatMat& Rn1_n, const RatMat& Rn1_np1,
                                               const RatMat& Rn2_n, const RatMat& Rn2_np1);

}  // namespace mvcheb::mvop
