#include <algorithm>
#include "mvcheb/hyp2h1.hpp"

#include <stdexcept>

#include "mvcheb/opbase.hpp"
#include "mvcheb/special.hpp"

namespace mvcheb {

UDomainMats u_domain_mats(int twoL) {
  int d = twoL + 1;
  Rational l(twoL, 2);
  UDomainMats m{RatMat(d, d), RatMat(d, d), RatMat(d, d), RatMat(d, d), RatMat(d, d), RatMat(d, d)};
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) m.C.at(i, i + 1) = -Rational(twoL - i, 2);
    m.C.at(i, i) = Rational(twoL + 3, 2);
    if (i >= 1) m.C.at(i, i - 1) = -Rational(i, 2);
    m.U.at(i, i) = Rational(twoL + 3);
    m.V.at(i, i) = -Rational(i) * Rational(twoL - i);
    if (twoL >= 1) {
      if (i + 1 < d) m.B0.at(i, i + 1) = -Rational(twoL - i) / (Rational(4) * l);
      m.B0.at(i, i) = (l - Rational(i)) / (Rational(2) * l);
      if (i >= 1) m.B0.at(i, i - 1) = Rational(i) / (Rational(4) * l);
      m.B1.at(i, i) = -(l - Rational(i)) / l;
      m.A0.at(i, i) = Rational(twoL + 2) * (Rational(i) - Rational(twoL)) / (Rational(2) * l);
    }
  }
  return m;
}

}  // namespace mvcheb

namespace mvcheb::mhyp {

StructureTriple structure_matrices(int twoL, const Rational& alpha) {
  if (twoL < 0) throw std::invalid_argument("structure_matrices: twoL must be non-negative");
  if (twoL == 0 && !alpha.is_zero())
    throw std::invalid_argument("structure_matrices: alpha must be 0 when twoL = 0");
  UDomainMats m = u_domain_mats(twoL);
  StructureTriple t;
  t.twoL = twoL;
  t.alpha = alpha;
  t.C = m.C + alpha * m.B0;
  t.U = m.U - alpha * m.B1;
  t.V = m.V - alpha * m.A0;
  return t;
}

BracketSeq bracket_seq(const StructureTriple& triple, const Rational& lambda, int N) {
  int d = triple.twoL + 1;
  BracketSeq seq{triple, lambda, {RatMat::identity(d)}};
  RatMat Ct = triple.C.transpose();
  for (int i = 0; i < N; ++i) {
    RatMat shifted = Ct + RatMat::identity(d) * Rational(i);
    auto inv = shifted.inverse();
    if (!inv)
      throw std::domain_error("bracket_seq: C^t + " + std::to_string(i) + " is singular");
    RatMat mid(d, d);
    for (int q = 0; q < d; ++q)
      mid.at(q, q) = Rational(i) * Rational(i) + Rational(i) * (triple.U.at(q, q) - Rational(1)) +
                     triple.V.at(q, q) + lambda;
    seq.brackets.push_back(*inv * mid * seq.brackets.back());
  }
  return seq;
}

Rational eigenvalue_lambda(int twoL, const Rational& alpha, int j, int n) {
  if (twoL == 0 && !alpha.is_zero())
    throw std::invalid_argument("eigenvalue_lambda: alpha must be 0 when twoL = 0");
  if (j < 0 || j > twoL) throw std::out_of_range("eigenvalue_lambda: j out of range");
  Rational l(twoL, 2);
  Rational lamD = -Rational(n) * Rational(n - 1) - Rational(n) * Rational(twoL + 3) +
                  Rational(j) * Rational(twoL - j);
  if (alpha.is_zero()) return lamD;
  Rational lamE = -Rational(n) * (l - Rational(j)) / l +
                  Rational(twoL + 2) * (Rational(j) - Rational(twoL)) / (Rational(2) * l);
  return lamD + alpha * lamE;
}

bool degeneracy_check(int twoL, const Rational& alpha, int nMax) {
  std::vector<Rational> seen;
  for (int n = 0; n <= nMax; ++n)
    for (int j = 0; j <= twoL; ++j) {
      Rational v = eigenvalue_lambda(twoL, alpha, j, n);
      for (const auto& s : seen)
        if (s == v) return false;
      seen.push_back(v);
    }
  return true;
}

std::vector<Poly> row_via_2h1(int twoL, const Rational& alpha, int n, int i) {
  if (i < 0 || i > twoL) throw std::out_of_range("row_via_2h1: row index out of range");
  if (!degeneracy_check(twoL, alpha, n))
    throw std::domain_error("row_via_2h1: degenerate alpha for the requested degree");
  StructureTriple t = structure_matrices(twoL, alpha);
  Rational lambda = eigenvalue_lambda(twoL, alpha, i, n);
  BracketSeq seq = bracket_seq(t, lambda, n);
  int d = twoL + 1;
  auto inv = seq.brackets[n].inverse();
  if (!inv) throw std::domain_error("row_via_2h1: bracket " + std::to_string(n) + " is singular");
  // P0 = n! brackets[n]^{-1} e_i
  std::vector<Rational> p0(d);
  Rational nfac = Rational::factorial(n);
  for (int q = 0; q < d; ++q) p0[q] = nfac * inv->at(q, i);
  // row(u)_j = sum_m u^m / m! (brackets[m] P0)_j
  std::vector<Poly> row(d);
  for (int m = 0; m <= n; ++m) {
    Rational mfacInv = Rational(1) / Rational::factorial(m);
    for (int j = 0; j < d; ++j) {
      Rational c(0);
      for (int q = 0; q < d; ++q) c += seq.brackets[m].at(j, q) * p0[q];
      row[j] += Poly::monomial(m, c * mfacInv);
    }
  }
  return row;
}

bool krawtchouk_eigencheck(int twoL, const Rational& alpha) {
  if (twoL < 1) throw std::invalid_argument("krawtchouk_eigencheck: twoL must be >= 1");
  StructureTriple t = structure_matrices(twoL, alpha);
  int d = twoL + 1;
  Rational l(twoL, 2);
  if (alpha == Rational(twoL) || alpha == -Rational(twoL)) {
    // triangular branch: the spectrum is the diagonal, as a set
    std::vector<Rational> diag, expect;
    for (int j = 0; j < d; ++j) {
      diag.push_back(t.C.at(j, j));
      expect.push_back(Rational(2 * j + 3, 2));
    }
    auto cmp = [](const Rational& a, const Rational& b) { return a < b; };
    std::sort(diag.begin(), diag.end(), cmp);
    std::sort(expect.begin(), expect.end(), cmp);
    return diag == expect;
  }
  Rational p = (Rational(twoL) + alpha) / Rational(2 * twoL);
  for (int x = 0; x <= twoL; ++x) {
    std::vector<Rational> v(d);
    for (int m = 0; m <= twoL; ++m) v[m] = special::krawtchouk(m, x, p, twoL);
    Rational ev = Rational(3, 2) + Rational(x);
    for (int r = 0; r < d; ++r) {
      Rational lhs(0);
      for (int c = 0; c < d; ++c) lhs += t.C.at(r, c) * v[c];
      if (lhs != ev * v[r]) return false;
    }
  }
  return true;
}

}  // namespace mvcheb::mhyp
