#include "mvcheb/group.hpp"

#include <stdexcept>

#include "mvcheb/diffops.hpp"
#include "mvcheb/ratmat.hpp"

namespace mvcheb::group {

LaurentMat LaurentMat::from(int rows, int cols, std::function<LaurentPoly(int, int)> f) {
  LaurentMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f(i, j);
  return m;
}

LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("LaurentMat: shape mismatch");
  LaurentMat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

LaurentMat LaurentMat::scale(const LaurentPoly& s) const {
  LaurentMat r = *this;
  for (auto& e : r.e_) e *= s;
  return r;
}

LaurentMat LaurentMat::derivative() const {
  LaurentMat r = *this;
  for (auto& e : r.e_) e = e.derivative();
  return r;
}

LaurentPoly LaurentMat::det2() const {
  if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("det2: 2x2 only");
  return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

LaurentMat phi0(int twoL) {
  int d = twoL + 1;
  // All half-integers are tracked doubled: p2 = 2p, j2 = 2j.
  return LaurentMat::from(d, d, [&](int row, int col) {
    long p2 = 2L * row - twoL, j2 = 2L * col - twoL;
    Rational pref = Rational::factorial((twoL - j2) / 2) * Rational::factorial((twoL + j2) / 2) *
                    Rational::factorial((twoL - p2) / 2) * Rational::factorial((twoL + p2) / 2) /
                    Rational::factorial(twoL);
    long rlo = std::max(0L, -(p2 + j2) / 2);
    long rhi = std::min((twoL - p2) / 2, (twoL - j2) / 2);
    LaurentPoly sum;
    for (long r = rlo; r <= rhi; ++r) {
      long exponent = 4 * r - twoL + p2 + j2;
      Rational den = Rational::factorial(r) * Rational::factorial((twoL - p2) / 2 - r) *
                     Rational::factorial((twoL - j2) / 2 - r) *
                     Rational::factorial((p2 + j2) / 2 + r);
      sum += LaurentPoly::term(exponent, GaussianRational(Rational(1) / den));
    }
    return sum.is_zero() ? sum : sum * GaussianRational(pref);
  });
}

namespace {

// (S)_{p,j} = -(l-j) [p-j=1] - (l+j) [j-p=1], stored with p = -l + row.
RatMat s_matrix(int twoL) {
  int d = twoL + 1;
  RatMat s(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Rational p = Rational(2 * r - twoL, 2), j = Rational(2 * c - twoL, 2);
      Rational l(twoL, 2);
      if ((p - j) == Rational(1)) s.at(r, c) += -(l - j);
      if ((j - p) == Rational(1)) s.at(r, c) += -(l + j);
    }
  return s;
}

RatMat u_diag(int twoL) {
  int d = twoL + 1;
  RatMat m(d, d);
  for (int r = 0; r < d; ++r) m.at(r, r) = -Rational(2 * (2 * r - twoL), 2);  // -2p
  return m;
}

// (U_lu)_{i,j} = (-2l+2j) [i=j+1] + (2l+2j) [i+1=j]
RatMat u_lu(int twoL) {
  int d = twoL + 1;
  RatMat m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Rational i = Rational(2 * r - twoL, 2), j = Rational(2 * c - twoL, 2);
      Rational l(twoL, 2);
      if (i == j + Rational(1)) m.at(r, c) += Rational(-2) * l + Rational(2) * j;
      if (i + Rational(1) == j) m.at(r, c) += Rational(2) * l + Rational(2) * j;
    }
  return m;
}

// Weight matrix of the torus Cartan element in the phi0 row storage: the
// column eigenfunctions carry descending weights, so T(H) = diag(-2p).
RatMat torus_h(int twoL) { return u_diag(twoL); }

RatMat lambda_0(int twoL) {
  int d = twoL + 1;
  RatMat m(d, d);
  Rational l(twoL, 2);
  for (int r = 0; r < d; ++r) {
    Rational p = Rational(2 * r - twoL, 2);
    m.at(r, r) = (p * p + l * (l + Rational(2))) / Rational(4);
  }
  return m;
}

RatMat gamma_0(int twoL) {
  int d = twoL + 1;
  RatMat m(d, d);
  Rational l(twoL, 2);
  for (int r = 0; r < d; ++r) {
    Rational p = Rational(2 * r - twoL, 2);
    m.at(r, r) = -p * (l + Rational(1)) / Rational(2);  // column weight is -p
  }
  return m;
}

}  // namespace

bool phi0_identity_checks(int twoL) {
  if (twoL < 0) throw std::invalid_argument("phi0_identity_checks: twoL must be non-negative");
  LaurentMat f = phi0(twoL);
  int d = twoL + 1;
  Rational l(twoL, 2);

  // (1/2) w (w^2 - w^-2) dPhi0/dw = Phi0 sigma(w), sigma = l(w^2+w^-2) I + S
  LaurentPoly w2 = LaurentPoly::term(2, GaussianRational(1));
  LaurentPoly wm2 = LaurentPoly::term(-2, GaussianRational(1));
  LaurentPoly half_w_diff = (LaurentPoly::term(3, GaussianRational(Rational(1, 2))) -
                             LaurentPoly::term(-1, GaussianRational(Rational(1, 2))));
  LaurentMat lhs1 = f.derivative().scale(half_w_diff);
  RatMat s = s_matrix(twoL);
  LaurentMat sigma = LaurentMat::from(d, d, [&](int i, int j) {
    LaurentPoly v = LaurentPoly::term(0, GaussianRational(s.at(i, j)));
    if (i == j) v += (w2 + wm2) * GaussianRational(l);
    return v;
  });
  if (!(lhs1 == f * sigma)) return false;

  // (w^4 - 1) b1 Phi0 = Phi0 (w^4 - 1) upsilon(w), cleared of denominators:
  // (w^5 - w) T(H) Phi0 = Phi0 (1/8)(w(1+w^4) U_diag + w^3 U_lu) * 8
  RatMat th = torus_h(twoL);
  LaurentPoly w5mw = LaurentPoly::term(5, GaussianRational(1)) -
                     LaurentPoly::term(1, GaussianRational(1));
  LaurentMat lhs2 = LaurentMat::from(d, d, [&](int i, int j) {
    return f.at(i, j) * GaussianRational(th.at(i, i)) * w5mw;
  });
  RatMat ud = u_diag(twoL), ul = u_lu(twoL);
  LaurentPoly w_1pw4 = LaurentPoly::term(1, GaussianRational(1)) +
                       LaurentPoly::term(5, GaussianRational(1));
  LaurentPoly w3 = LaurentPoly::term(3, GaussianRational(1));
  LaurentMat upsilon8 = LaurentMat::from(d, d, [&](int i, int j) {
    return w_1pw4 * GaussianRational(ud.at(i, j)) + w3 * GaussianRational(ul.at(i, j));
  });
  return lhs2 == f * upsilon8;
}

bool group_operator_relation_check(int twoL) {
  if (twoL < 1) throw std::invalid_argument("group_operator_relation_check: twoL must be >= 1");
  int d = twoL + 1;
  Rational l(twoL, 2);
  using dop::MatDiffOp;

  // Omega~ = 1/4 (z^2-1) d^2 + 1/4 ((2l+3) z I + S) d + Lambda_0, left-acting;
  // transposing the coefficient grids makes it right-acting.
  MatDiffOp omega;
  omega.coeffs.push_back(MatPoly::from_ratmat(lambda_0(twoL)));
  omega.coeffs.push_back((MatPoly::identity(d) * Poly::monomial(1, Rational(twoL + 3)) +
                          MatPoly::from_ratmat(s_matrix(twoL))) *
                         Rational(1, 4));
  omega.coeffs.push_back(MatPoly::identity(d) *
                         ((Poly::monomial(2, Rational(1)) - Poly::one()) * Rational(1, 4)));

  MatDiffOp delta;
  delta.coeffs.push_back(MatPoly::from_ratmat(gamma_0(twoL)));
  delta.coeffs.push_back((MatPoly::from_ratmat(u_diag(twoL)) * Poly::monomial(1, Rational(2)) +
                          MatPoly::from_ratmat(u_lu(twoL))) *
                         Rational(1, 8));

  // -4 Omega~^t + 2(l^2 + l) = Dtilde
  MatDiffOp lhsD = omega.transpose_coeffs() * Rational(-4);
  lhsD.coeffs[0] = lhsD.coeffs[0] + MatPoly::identity(d) * (Rational(2) * (l * l + l));
  if (!(lhsD == dop::build_Dtilde(twoL))) return false;

  // -(2/l) Delta~^t - (l+1) = Etilde
  MatDiffOp lhsE = delta.transpose_coeffs() * (Rational(-2) / l);
  lhsE.coeffs[0] = lhsE.coeffs[0] - MatPoly::identity(d) * (l + Rational(1));
  return lhsE == dop::build_Etilde(twoL);
}

}  // namespace mvcheb::group
