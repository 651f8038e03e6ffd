#include "mvcheb/recurrence.hpp"

#include <stdexcept>

namespace mvcheb::mvop {

RatMat recurrence_X(const WeightSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("recurrence_X: n must be non-negative");
  int twoL = spec.twoL, d = spec.dim();
  RatMat x(d, d);
  for (int i = 0; i < d; ++i) {
    x.at(i, i) = Rational(1, 2);
    if (i >= 1)
      x.at(i, i - 1) = -Rational(static_cast<long long>(i) * i) /
                       (Rational(4) * Rational(n + i) * Rational(n + i + 1));
    if (i + 1 < d)
      x.at(i, i + 1) = -Rational(static_cast<long long>(twoL - i) * (twoL - i)) /
                       (Rational(4) * Rational(twoL + n - i) * Rational(twoL + n - i + 1));
  }
  return x;
}

RatMat recurrence_Y(const WeightSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("recurrence_Y: n must be >= 1");
  int twoL = spec.twoL, d = spec.dim();
  RatMat y(d, d);
  for (int i = 0; i < d; ++i)
    y.at(i, i) = Rational(static_cast<long long>(n) * n) * Rational(twoL + n + 1).pow(2) /
                 (Rational(16) * Rational(n + i) * Rational(n + i + 1) * Rational(twoL + n - i) *
                  Rational(twoL + n - i + 1));
  return y;
}

MonicPolySeq build_seq(const WeightSpec& spec, int degreeMax) {
  MonicPolySeq seq{spec, degreeMax, {}};
  int d = spec.dim();
  seq.polys.push_back(MatPoly::identity(d));
  Poly u = Poly::x();
  for (int n = 0; n < degreeMax; ++n) {
    MatPoly next = seq.polys[n] * u - MatPoly::from_ratmat(recurrence_X(spec, n)) * seq.polys[n];
    if (n >= 1) next = next - MatPoly::from_ratmat(recurrence_Y(spec, n)) * seq.polys[n - 1];
    seq.polys.push_back(std::move(next));
  }
  return seq;
}

MatPoly monic_R(const WeightSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("monic_R: n must be non-negative");
  return build_seq(spec, n).polys[n];
}

MatPoly monic_P(const WeightSpec& spec, int n) {
  MatPoly r = monic_R(spec, n);
  MatPoly p = r.compose_affine(Rational(1, 2), Rational(-1, 2));
  return p * Rational(-2).pow(n);
}

PiMat inner_product_W(const WeightSpec& spec, const MatPoly& A, const MatPoly& B) {
  if (A.cols() != spec.dim() || B.cols() != spec.dim())
    throw std::invalid_argument("inner_product_W: shape mismatch");
  MatPoly w = weight::weight_poly(spec);
  return integrate_halfcircle(A * w * B.transpose());
}

PiMat squared_norm_H(const WeightSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("squared_norm_H: n must be non-negative");
  int twoL = spec.twoL, d = spec.dim();
  return PiMat::from(d, d, [&](int i, int j) {
    if (i != j) return PiRational{};
    Rational v = Rational(1, 2) * Rational::factorial(n).pow(2) *
                 Rational::pochhammer(Rational(twoL + 1), n + 1).pow(2) /
                 (Rational::pochhammer(Rational(i + 1), n).pow(2) *
                  Rational::pochhammer(Rational(twoL - i + 1), n).pow(2)) *
                 Rational(1, 4).pow(n) / (Rational(n + i + 1) * Rational(twoL - i + n + 1));
    return PiRational{v};
  });
}

LeadingCoeffs leading_coeffs(const WeightSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("leading_coeffs: n must be >= 1");
  int twoL = spec.twoL, d = spec.dim();
  LeadingCoeffs lc;
  lc.Rn1 = RatMat(d, d);
  for (int j = 0; j < d; ++j) {
    if (j >= 1) lc.Rn1.at(j, j - 1) = Rational(static_cast<long long>(j) * n) / (Rational(4) * Rational(n + j));
    lc.Rn1.at(j, j) = -Rational(n, 2);
    if (j + 1 < d)
      lc.Rn1.at(j, j + 1) =
          Rational(n) * Rational(twoL - j) / (Rational(4) * Rational(twoL - j + n));
  }
  lc.Rn2 = RatMat(d, d);
  if (n >= 2) {
    Rational nn1 = Rational(n) * Rational(n - 1);
    for (int j = 0; j < d; ++j) {
      if (j >= 2)
        lc.Rn2.at(j, j - 2) = nn1 * Rational(j) * Rational(j - 1) /
                              (Rational(32) * Rational(n + j) * Rational(n + j - 1));
      if (j >= 1)
        lc.Rn2.at(j, j - 1) = -nn1 * Rational(j) / (Rational(8) * Rational(n + j));
      // the paper's stray "i" in the diagonal denominator is read as j
      lc.Rn2.at(j, j) = nn1 *
                        Rational(3LL * j * j - 3LL * twoL * j - 2LL * n * n + n - 2LL * n * twoL) /
                        (Rational(16) * Rational(n + j) * Rational(j - twoL - n));
      if (j + 1 < d)
        lc.Rn2.at(j, j + 1) =
            -nn1 * Rational(twoL - j) / (Rational(8) * Rational(twoL + n - j));
      if (j + 2 < d)
        lc.Rn2.at(j, j + 2) = nn1 * Rational(twoL - j) * Rational(twoL - j - 1) /
                              (Rational(32) * Rational(twoL - j + n - 1) * Rational(twoL + n - j));
    }
  }
  return lc;
}

std::pair<RatMat, RatMat> coeffs_to_recurrence(const RatMat& Rn1_n, const RatMat& Rn1_np1,
                                               const RatMat& Rn2_n, const RatMat& Rn2_np1) {
  if (Rn1_n.rows() != Rn1_np1.rows() || Rn2_n.rows() != Rn2_np1.rows() ||
      Rn1_n.rows() != Rn2_n.rows() || Rn1_n.rows() != Rn1_n.cols())
    throw std::invalid_argument("coeffs_to_recurrence: shape mismatch");
  RatMat x = Rn1_n - Rn1_np1;
  RatMat y = Rn2_n - Rn2_np1 - x * Rn1_n;
  return {x, y};
}

}  // namespace mvcheb::mvop
