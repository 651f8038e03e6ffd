#include "mvcheb/diffops.hpp"

#include <stdexcept>

#include "mvcheb/integrate.hpp"
#include "mvcheb/opbase.hpp"
#include "mvcheb/recurrence.hpp"
#include "mvcheb/special.hpp"
#include "mvcheb/weight.hpp"

namespace mvcheb::dop {

namespace {

Poly u_one_minus_u() { return Poly::x() - Poly::x() * Poly::x(); }

MatPoly scalar_poly(int d, const Poly& p) { return MatPoly::identity(d) * p; }

Rational falling(long a, long i) {
  Rational r(1);
  for (long q = 0; q < i; ++q) r *= Rational(a - q);
  return r;
}

}  // namespace

bool operator==(const MatDiffOp& a, const MatDiffOp& b) {
  int n = std::max(a.order(), b.order());
  int d = a.dim();
  if (d != b.dim()) return false;
  for (int i = 0; i <= n; ++i) {
    MatPoly ai = i <= a.order() ? a.coeffs[i] : MatPoly(d, d);
    MatPoly bi = i <= b.order() ? b.coeffs[i] : MatPoly(d, d);
    if (ai != bi) return false;
  }
  return true;
}

MatDiffOp operator+(const MatDiffOp& a, const MatDiffOp& b) {
  int d = a.dim();
  MatDiffOp r;
  for (int i = 0; i <= std::max(a.order(), b.order()); ++i) {
    MatPoly c(d, d);
    if (i <= a.order()) c = c + a.coeffs[i];
    if (i <= b.order()) c = c + b.coeffs[i];
    r.coeffs.push_back(std::move(c));
  }
  return r;
}

MatDiffOp operator-(const MatDiffOp& a, const MatDiffOp& b) {
  MatDiffOp nb = b;
  for (auto& c : nb.coeffs) c = -c;
  return a + nb;
}

MatDiffOp operator*(const MatDiffOp& a, const Rational& s) {
  MatDiffOp r = a;
  for (auto& c : r.coeffs) c = c * s;
  return r;
}

bool MatDiffOp::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

MatDiffOp MatDiffOp::transpose_coeffs() const {
  MatDiffOp r = *this;
  for (auto& c : r.coeffs) c = c.transpose();
  return r;
}

MatDiffOp MatDiffOp::jconj() const {
  MatDiffOp r = *this;
  for (auto& c : r.coeffs) c = c.jconj();
  return r;
}

MatPoly apply_right(const MatPoly& p, const MatDiffOp& op) {
  if (p.cols() != op.dim()) throw std::invalid_argument("apply_right: shape mismatch");
  MatPoly result(p.rows(), op.dim());
  MatPoly deriv = p;
  for (int i = 0; i <= op.order(); ++i) {
    result = result + deriv * op.coeffs[i];
    deriv = deriv.derivative();
  }
  return result;
}

MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b) {
  int d = a.dim();
  int orderOut = a.order() + b.order();
  MatDiffOp r;
  r.coeffs.assign(orderOut + 1, MatPoly(d, d));
  // ((P.a).b) = sum_j (sum_i P^{(i)} A_i)^{(j)} B_j; Leibniz on the inner product.
  for (int j = 0; j <= b.order(); ++j)
    for (int i = 0; i <= a.order(); ++i) {
      MatPoly da = a.coeffs[i];  // will be differentiated j-r times
      for (int r_ = j; r_ >= 0; --r_) {
        // accumulate binom(j, r_) * d^{j-r_}A_i * B_j into coefficient i + r_
        MatPoly term = da * Rational::binomial(j, r_);
        r.coeffs[i + r_] = r.coeffs[i + r_] + term * b.coeffs[j];
        if (r_ > 0) da = da.derivative();
      }
    }
  while (r.coeffs.size() > 1 && r.coeffs.back().is_zero()) r.coeffs.pop_back();
  return r;
}

MatDiffOp build_Dtilde(int twoL) {
  int d = twoL + 1;
  RatMat ct(d, d), vt(d, d);
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) ct.at(i, i + 1) = Rational(twoL - i);
    if (i >= 1) ct.at(i, i - 1) = Rational(i);
    vt.at(i, i) = -Rational(i) * Rational(twoL - i);
  }
  MatPoly c1 = MatPoly::from_ratmat(ct) - MatPoly::identity(d) * Poly::monomial(1, Rational(twoL + 3));
  MatDiffOp op;
  op.coeffs.push_back(MatPoly::from_ratmat(-vt));
  op.coeffs.push_back(c1);
  op.coeffs.push_back(scalar_poly(d, Poly::one() - Poly::x() * Poly::x()));
  return op;
}

MatDiffOp build_Etilde(int twoL) {
  if (twoL < 1) throw std::invalid_argument("build_Etilde: no first-order operator at twoL = 0");
  int d = twoL + 1;
  Rational l(twoL, 2);
  RatMat b0(d, d), b1(d, d), a(d, d);
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) b0.at(i, i + 1) = Rational(twoL - i) / Rational(twoL);
    if (i >= 1) b0.at(i, i - 1) = -Rational(i) / Rational(twoL);
    b1.at(i, i) = -(l - Rational(i)) / l;
    a.at(i, i) = Rational(twoL + 2) * (Rational(i) - Rational(twoL)) / Rational(twoL);
  }
  MatDiffOp op;
  op.coeffs.push_back(MatPoly::from_ratmat(a));
  op.coeffs.push_back(MatPoly::from_ratmat(b0) +
                      MatPoly::from_ratmat(b1) * Poly::monomial(1, Rational(1)));
  return op;
}

RatMat lambda_Dtilde(int twoL, int n) {
  int d = twoL + 1;
  return RatMat::from(d, d, [&](int i, int j) {
    if (i != j) return Rational(0);
    return -Rational(n) * Rational(n - 1) - Rational(n) * Rational(twoL + 3) +
           Rational(i) * Rational(twoL - i);
  });
}

RatMat lambda_Etilde(int twoL, int n) { return lambda_E(twoL, n); }

MatDiffOp build_D(int twoL) {
  int d = twoL + 1;
  UDomainMats m = u_domain_mats(twoL);
  MatDiffOp op;
  op.coeffs.push_back(MatPoly::from_ratmat(-m.V));
  op.coeffs.push_back(MatPoly::from_ratmat(m.C) -
                      MatPoly::from_ratmat(m.U) * Poly::monomial(1, Rational(1)));
  op.coeffs.push_back(scalar_poly(d, u_one_minus_u()));
  return op;
}

MatDiffOp build_E(int twoL) {
  if (twoL < 1) throw std::invalid_argument("build_E: no first-order operator at twoL = 0");
  UDomainMats m = u_domain_mats(twoL);
  MatDiffOp op;
  op.coeffs.push_back(MatPoly::from_ratmat(m.A0));
  op.coeffs.push_back(MatPoly::from_ratmat(m.B0) +
                      MatPoly::from_ratmat(m.B1) * Poly::monomial(1, Rational(1)));
  return op;
}

MatDiffOp combine_D_alpha(int twoL, const Rational& alpha) {
  if (alpha.is_zero()) return build_D(twoL);
  return build_D(twoL) + build_E(twoL) * alpha;
}

RatMat lambda_D(int twoL, int n) { return lambda_Dtilde(twoL, n); }

RatMat lambda_E(int twoL, int n) {
  if (twoL < 1) throw std::invalid_argument("lambda_E: no first-order operator at twoL = 0");
  int d = twoL + 1;
  Rational l(twoL, 2);
  return RatMat::from(d, d, [&](int i, int j) {
    if (i != j) return Rational(0);
    return -Rational(n) * (l - Rational(i)) / l +
           Rational(twoL + 2) * (Rational(i) - Rational(twoL)) / Rational(twoL);
  });
}

bool symmetry_check(int twoL, const MatDiffOp& op, int degMax) {
  weight::WeightSpec spec{twoL};
  MatPoly w = weight::weight_poly(spec);
  int d = spec.dim();
  std::vector<MatPoly> g;  // G_i = F_i * What
  for (int i = 0; i <= op.order(); ++i) g.push_back(op.coeffs[i] * w);
  // <x^a E_{rs} . op, x^b E_{tv}> = <x^a E_{rs}, x^b E_{tv} . op> reduces to
  // sum_i (a)_i^fall int x^{a+b-i} (G_i)_{sv} == sum_j (b)_j^fall int x^{a+b-j} (G_j)_{vs}.
  for (int s = 0; s < d; ++s)
    for (int v = 0; v < d; ++v)
      for (int a = 0; a <= degMax; ++a)
        for (int b = 0; b <= degMax; ++b) {
          PiRational lhs, rhs;
          for (int i = 0; i <= op.order() && i <= a; ++i) {
            Poly xa = Poly::monomial(a + b - i, falling(a, i));
            lhs = lhs + integrate_halfcircle(xa * g[i].at(s, v));
          }
          for (int j = 0; j <= op.order() && j <= b; ++j) {
            Poly xb = Poly::monomial(a + b - j, falling(b, j));
            rhs = rhs + integrate_halfcircle(xb * g[j].at(v, s));
          }
          if (lhs != rhs) return false;
        }
  return true;
}

MatPoly conj_M(int twoL) {
  int d = twoL + 1;
  return MatPoly::from(d, d, [&](int k, int l_) {
    if (l_ > k) return Poly::zero();
    return Rational::binomial(k, l_) *
           special::hyp_poly({Rational(l_ - k), Rational(k + l_ + 2)},
                             {Rational(l_) + Rational(3, 2)}, Poly::x());
  });
}

MatDiffOp conjugate_by_M(int twoL, const MatDiffOp& op) {
  int d = twoL + 1;
  if (op.order() >= 2 && op.coeffs[2] != scalar_poly(d, u_one_minus_u()))
    throw std::invalid_argument("conjugate_by_M: second-order symbol must be u(1-u) I");
  MatPoly m = conj_M(twoL);
  MatPoly minv = invert_unitriangular(m);
  return compose(compose(MatDiffOp::multiplication(minv), op), MatDiffOp::multiplication(m));
}

MatDiffOp script_D_expected(int twoL) {
  int d = twoL + 1;
  RatMat t11(d, d), t0(d, d);
  for (int i = 0; i < d; ++i) {
    t11.at(i, i) = Rational(2 * i + 3);
    t0.at(i, i) = Rational(twoL - i) * Rational(twoL + i + 2);
  }
  MatDiffOp op;
  op.coeffs.push_back(MatPoly::from_ratmat(t0));
  op.coeffs.push_back(MatPoly::from_ratmat(t11) * Rational(1, 2) -
                      MatPoly::from_ratmat(t11) * Poly::monomial(1, Rational(1)));
  op.coeffs.push_back(scalar_poly(d, u_one_minus_u()));
  return op;
}

MatDiffOp script_E_expected(int twoL) {
  if (twoL < 1) throw std::invalid_argument("script_E_expected: twoL must be >= 1");
  int d = twoL + 1;
  Rational l(twoL, 2);
  MatPoly s1(d, d), s0(d, d);
  Poly u1u = u_one_minus_u();
  Poly one_m_2u = Poly::one() - Poly::monomial(1, Rational(2));
  for (int i = 0; i < d; ++i) {
    if (i >= 1) {
      Rational c1 = Rational(static_cast<long long>(i) * i) * Rational(twoL + i + 1) /
                    (l * Rational(2 * i - 1) * Rational(2 * i + 1));
      s1.at(i, i - 1) = u1u * c1;
      Rational c0 = Rational(static_cast<long long>(i) * i) * Rational(twoL + i + 1) /
                    (Rational(2) * l * Rational(2 * i - 1));
      s0.at(i, i - 1) = one_m_2u * c0;
    }
    if (i + 1 < d) s1.at(i, i + 1) = Poly::constant(-Rational(twoL - i) / (Rational(4) * l));
    s0.at(i, i) = Poly::constant(
        (Rational(i) * Rational(i + 1) - Rational(4) * l * (l + Rational(1))) / (Rational(2) * l));
  }
  MatDiffOp op;
  op.coeffs.push_back(s0);
  op.coeffs.push_back(s1);
  return op;
}

RatMat lambda_scriptD(int twoL, int n) {
  RatMat r = lambda_D(twoL, n);
  if (twoL >= 1) r = r - lambda_E(twoL, n) * Rational(twoL);
  return r;
}

RatMat n_lambda(int twoL, const Rational& lambda) {
  if (twoL < 1) throw std::invalid_argument("n_lambda: twoL must be >= 1");
  MatDiffOp se = script_E_expected(twoL);
  MatDiffOp sd = script_D_expected(twoL);
  RatMat s1_0 = se.coeffs[1].eval(Rational(0));
  RatMat s0_0 = se.coeffs[0].eval(Rational(0));
  RatMat t0 = sd.coeffs[0].eval(Rational(0));
  int d = twoL + 1;
  RatMat halfT11(d, d);
  for (int i = 0; i < d; ++i) halfT11.at(i, i) = Rational(2 * i + 3, 2);
  RatMat lamMinusT0(d, d);
  for (int i = 0; i < d; ++i) lamMinusT0.at(i, i) = lambda - t0.at(i, i);
  return lamMinusT0 * *halfT11.inverse() * s1_0 + s0_0;
}

namespace {

Rational c_k0(int twoL, int k, int n) {
  return Rational(n % 2 ? -1 : 1) * Rational(1, 4).pow(n) * Rational::factorial(n) *
         Rational::pochhammer(Rational(twoL + 2), n) /
         (Rational::pochhammer(Rational(k + 1), n) *
          Rational::pochhammer(Rational(twoL - k + 1), n));
}

}  // namespace

std::vector<Rational> c_recurrence(int twoL, int k, int n) {
  if (k < 0 || k > twoL) throw std::out_of_range("c_recurrence: k out of range");
  std::vector<Rational> c = {c_k0(twoL, k, n)};
  Rational l(twoL, 2);
  // 2l * mu_n(k), with mu the first-order eigenvalue of the conjugated operator
  Rational mu2l = -Rational(2 * n) * (l - Rational(k)) +
                  Rational(twoL + 2) * (Rational(k) - Rational(twoL));
  for (int i = 0; i + 1 <= twoL; ++i) {
    Rational prev = i >= 1 ? c[i - 1] : Rational(0);
    Rational lhs_known =
        -Rational(i + k + n + 1) * Rational(i - k - n - 1) * Rational(twoL - i + 1) /
            Rational(2 * i + 1) * prev +
        (Rational(i) * Rational(i + 1) - Rational(4) * l * (l + Rational(1))) * c[i];
    Rational next = (mu2l * c[i] - lhs_known) * Rational(2 * i + 1) /
                    (Rational(i + 1).pow(2) * Rational(twoL + i + 2));
    c.push_back(next);
  }
  return c;
}

Rational c_closed(int twoL, int k, int j, int n) {
  if (k < 0 || k > twoL || j < 0 || j > twoL)
    throw std::out_of_range("c_closed: index out of range");
  if (j - k - n > 0) return Rational(0);
  special::HypSeriesSpec s;
  s.numeratorParams = {Rational(-j), Rational(j + 1), Rational(-k), Rational(-twoL - n - 1)};
  s.denominatorParams = {Rational(1), Rational(-k - n), Rational(-twoL)};
  s.argument = Rational(1);
  Rational f43 = special::hyp_terminating(s);
  Rational pre = Rational(j % 2 ? -1 : 1) * Rational::pochhammer(Rational(-twoL), j) *
                 Rational::pochhammer(Rational(-k - n), j) /
                 (Rational::factorial(j) * Rational::pochhammer(Rational(twoL + 2), j));
  return c_k0(twoL, k, n) * pre * f43;
}

bool scriptR_factorization_check(int twoL, int n) {
  weight::WeightSpec spec{twoL};
  MatPoly scr = mvop::monic_R(spec, n) * conj_M(twoL);
  for (int k = 0; k <= twoL; ++k)
    for (int j = 0; j <= twoL; ++j) {
      Poly expect;
      if (j - k - n <= 0) {
        Poly f = special::hyp_poly({Rational(j - k - n), Rational(n + k + j + 2)},
                                   {Rational(j) + Rational(3, 2)}, Poly::x());
        expect = c_closed(twoL, k, j, n) * f;
      }
      if (scr.at(k, j) != expect) return false;
    }
  return true;
}

bool scriptP_gegenbauer_check(int twoL, int n) {
  weight::WeightSpec spec{twoL};
  MatPoly lhs = mvop::monic_P(spec, n) * weight::lower_L(spec);
  for (int k = 0; k <= twoL; ++k)
    for (int j = 0; j <= twoL; ++j) {
      Poly expect;
      if (n + k - j >= 0) {
        Rational c = Rational(-2).pow(n) * c_closed(twoL, k, j, n) *
                     Rational::factorial(n + k - j) /
                     Rational::pochhammer(Rational(2 * j + 2), n + k - j);
        if (!c.is_zero()) expect = c * special::gegenbauer(Rational(j + 1), n + k - j);
      }
      if (lhs.at(k, j) != expect) return false;
    }
  return true;
}

bool c_orthogonality_check(int twoL, int n, int m, int k) {
  if (k < 0 || k > twoL || n < 0 || m < 0)
    throw std::out_of_range("c_orthogonality_check: index out of range");
  int lcol = k + n - m;
  bool ok = true;
  weight::WeightSpec spec{twoL};
  if (0 <= lcol && lcol <= twoL) {
    // factorial-weighted sum, a pi/2 away from the diagonal norm
    Rational sum(0);
    int jmax = std::min(twoL, n + k);
    for (int j = 0; j <= jmax; ++j)
      sum += c_closed(twoL, k, j, n) * c_closed(twoL, lcol, j, m) *
             Rational::factorial(j).pow(2) * Rational(2 * j + 1) *
             Rational::factorial(twoL + j + 1) * Rational::factorial(twoL - j) *
             Rational::factorial(n + k - j) /
             (Rational::factorial(n + k + j + 1) * Rational(n + k + 1) *
              Rational::factorial(twoL).pow(2));
    PiRational lhs = PiRational{sum * Rational(1, 2)};
    PiRational rhs = n == m ? mvop::squared_norm_H(spec, n).at(k, k) * Rational(1, 4).pow(n)
                            : PiRational{};
    ok = ok && lhs == rhs;
  }
  if (0 <= lcol && lcol <= std::min(twoL, n + k)) {
    // Racah-normalized variant on the finite lattice
    Rational l(twoL, 2);
    Rational sum(0);
    int jmax = std::min(twoL, n + k);
    for (int j = 0; j <= jmax; ++j)
      sum += Rational(2 * j + 1) * Rational::pochhammer(Rational(-twoL), j) *
             Rational::pochhammer(Rational(-n - k), j) /
             (Rational::pochhammer(Rational(twoL + 2), j) *
              Rational::pochhammer(Rational(n + k + 2), j)) *
             special::racah(k, j, Rational(-twoL - 1), Rational(-k - n - 1), Rational(0),
                            Rational(0)) *
             special::racah(lcol, j, Rational(-twoL - 1), Rational(-k - n - 1), Rational(0),
                            Rational(0));
    Rational rhs = n == m ? Rational(twoL + 1) * Rational(n + k + 1) / Rational(twoL + 1 + n - k)
                          : Rational(0);
    ok = ok && sum == rhs;
  }
  return ok;
}

}  // namespace mvcheb::dop
