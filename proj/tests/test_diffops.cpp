#include "doctest.h"
#include <random>

#include "mvcheb/diffops.hpp"
#include "mvcheb/hyp2h1.hpp"
#include "mvcheb/recurrence.hpp"
#include "mvcheb/special.hpp"
#include "mvcheb/weight.hpp"

using namespace mvcheb;
using namespace mvcheb::dop;
using mvop::WeightSpec;

namespace {

MatPoly lambda_times(const RatMat& lam, const MatPoly& p) {
  return MatPoly::from_ratmat(lam) * p;
}

}  // namespace

TEST_CASE("operator construction") {
  // scalar case: Dtilde = (1-x^2) d^2 - 3x d
  MatDiffOp d0 = build_Dtilde(0);
  CHECK(d0.coeffs[2].at(0, 0) == Poly::one() - Poly::monomial(2, Rational(1)));
  CHECK(d0.coeffs[1].at(0, 0) == Poly::monomial(1, Rational(-3)));
  CHECK(d0.coeffs[0].at(0, 0).is_zero());

  MatDiffOp dt = build_Dtilde(4);
  CHECK(dt.coeffs[1].at(0, 1) == Poly::constant(Rational(4)));  // first superdiagonal = 2l

  MatDiffOp et = build_Etilde(1);
  CHECK(et.coeffs[0].at(0, 0) == Poly::constant(Rational(-3)));
  CHECK(et.coeffs[0].at(1, 1).is_zero());
  CHECK_THROWS(build_Etilde(0));

  // u-domain: D = u(1-u) d^2 + (3/2 - 3u) d at twoL = 0
  MatDiffOp du = build_D(0);
  CHECK(du.coeffs[1].at(0, 0) ==
        Poly::constant(Rational(3, 2)) + Poly::monomial(1, Rational(-3)));
  // D_alpha coefficient of d^1 is C_alpha - u U_alpha
  MatDiffOp da = combine_D_alpha(2, Rational(1, 3));
  auto t = mhyp::structure_matrices(2, Rational(1, 3));
  CHECK(da.coeffs[1] == MatPoly::from_ratmat(t.C) -
                            MatPoly::from_ratmat(t.U) * Poly::monomial(1, Rational(1)));
}

TEST_CASE("apply_right basics") {
  MatDiffOp dt = build_Dtilde(1);
  CHECK(apply_right(MatPoly::identity(2), dt) == dt.coeffs[0]);
  // R_0 . D = -V = Lambda_0(D) I
  MatDiffOp du = build_D(2);
  CHECK(apply_right(MatPoly::identity(3), du) == MatPoly::from_ratmat(lambda_D(2, 0)));
  // scalar: U_2 . Dtilde = -8 U_2
  MatPoly u2(1, 1);
  u2.at(0, 0) = special::chebyshev_u(2);
  CHECK(apply_right(u2, build_Dtilde(0)) == u2 * Rational(-8));
  CHECK_THROWS(apply_right(MatPoly::identity(3), dt));
}

TEST_CASE("eigen equations for Dtilde and Etilde") {
  WeightSpec s1{1};
  MatPoly p1 = mvop::monic_P(s1, 1);
  CHECK(apply_right(p1, build_Dtilde(1)) == lambda_times(lambda_Dtilde(1, 1), p1));
  for (int twoL = 0; twoL <= 4; ++twoL) {
    WeightSpec s{twoL};
    MatDiffOp dt = build_Dtilde(twoL);
    for (int n = 0; n <= 5; ++n) {
      MatPoly pn = mvop::monic_P(s, n);
      CHECK(apply_right(pn, dt) == lambda_times(lambda_Dtilde(twoL, n), pn));
      if (twoL >= 1) {
        CHECK(apply_right(pn, build_Etilde(twoL)) ==
              lambda_times(lambda_Etilde(twoL, n), pn));
      }
    }
  }
}

TEST_CASE("eigen equations in the u domain") {
  for (int twoL = 0; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    for (int n = 0; n <= 4; ++n) {
      MatPoly rn = mvop::monic_R(s, n);
      CHECK(apply_right(rn, build_D(twoL)) == lambda_times(lambda_D(twoL, n), rn));
      if (twoL >= 1)
        CHECK(apply_right(rn, build_E(twoL)) == lambda_times(lambda_E(twoL, n), rn));
    }
  }
}

TEST_CASE("composition and commutators") {
  MatDiffOp dt = build_Dtilde(2);
  MatDiffOp idop = MatDiffOp::multiplication(MatPoly::identity(3));
  CHECK(compose(dt, idop) == dt);
  CHECK(compose(idop, dt) == dt);
  for (int twoL = 1; twoL <= 3; ++twoL) {
    MatDiffOp d = build_Dtilde(twoL), e = build_Etilde(twoL);
    CHECK((compose(d, e) - compose(e, d)).is_zero());
    // apply-then-apply agrees with the composed operator
    WeightSpec s{twoL};
    MatPoly p2 = mvop::monic_P(s, 2);
    CHECK(apply_right(apply_right(p2, d), e) == apply_right(p2, compose(d, e)));
  }
  // order additivity on generic first-order pairs
  MatDiffOp a, b;
  a.coeffs = {MatPoly::identity(2) * Poly::x(),
              MatPoly::identity(2) * (Poly::one() + Poly::x())};
  b.coeffs = {MatPoly::identity(2) * Poly::one(), MatPoly::identity(2) * Poly::x()};
  CHECK(compose(a, b).order() == 2);
  // u-domain pair commutes as well
  for (int twoL = 1; twoL <= 3; ++twoL) {
    MatDiffOp d = build_D(twoL), e = build_E(twoL);
    CHECK((compose(d, e) - compose(e, d)).is_zero());
  }
}

TEST_CASE("J invariance") {
  for (int twoL = 1; twoL <= 4; ++twoL) {
    MatDiffOp dt = build_Dtilde(twoL);
    CHECK(dt.jconj() == dt);
  }
}

TEST_CASE("symmetry with respect to the weight") {
  CHECK(symmetry_check(1, build_Dtilde(1), 3));
  CHECK(symmetry_check(1, build_Etilde(1), 3));
  CHECK(symmetry_check(0, build_Dtilde(0), 3));
  // a perturbed zero-order coefficient must fail
  MatDiffOp broken = build_Dtilde(1);
  broken.coeffs[0].at(0, 0) += Poly::one();
  CHECK_FALSE(symmetry_check(1, broken, 3));
}

TEST_CASE("conjugation by M") {
  // M at twoL=0 is the identity: conjugation is a no-op
  MatDiffOp du0 = build_D(0);
  CHECK(conjugate_by_M(0, du0) == du0);

  for (int twoL = 1; twoL <= 3; ++twoL) {
    MatDiffOp dm2l = combine_D_alpha(twoL, Rational(-twoL));
    CHECK(conjugate_by_M(twoL, dm2l) == script_D_expected(twoL));
    CHECK(conjugate_by_M(twoL, build_E(twoL)) == script_E_expected(twoL));
    // away from alpha = -2l the conjugate is not diagonal
    MatDiffOp conj0 = conjugate_by_M(twoL, build_D(twoL));
    bool diag = true;
    for (const auto& c : conj0.coeffs)
      for (int i = 0; i <= twoL; ++i)
        for (int j = 0; j <= twoL; ++j)
          if (i != j && !c.at(i, j).is_zero()) diag = false;
    CHECK_FALSE(diag);
  }
  // precondition: order-2 symbol must be u(1-u) I
  CHECK_THROWS(conjugate_by_M(1, build_Dtilde(1)));
}

TEST_CASE("script operator expected forms") {
  MatDiffOp sd = script_D_expected(2);
  for (int i = 0; i <= 2; ++i) {
    CHECK(sd.coeffs[0].at(i, i) == Poly::constant(Rational(2 - i) * Rational(4 + i)));
    CHECK(sd.coeffs[1].at(i, i).coeff(0) == Rational(2 * i + 3, 2));
  }
  MatDiffOp se = script_E_expected(2);
  for (int i = 0; i <= 2; ++i)
    CHECK(se.coeffs[0].at(i, i) ==
          Poly::constant((Rational(i) * Rational(i + 1) - Rational(8)) / Rational(2)));
}

TEST_CASE("script R_n are eigenfunctions of the decoupled operator") {
  for (int twoL = 1; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    MatDiffOp sd = script_D_expected(twoL);
    for (int n = 0; n <= 3; ++n) {
      MatPoly scr = mvop::monic_R(s, n) * conj_M(twoL);
      CHECK(apply_right(scr, sd) == lambda_times(lambda_scriptD(twoL, n), scr));
    }
  }
}

TEST_CASE("N(lambda) eigen-relation for coefficient rows") {
  // hand expansion at twoL=1: N(lambda) = [[-3, -(lambda-3)/3], [3, -1]]
  Rational lam(7, 2);
  RatMat n1 = n_lambda(1, lam);
  RatMat expect(2, 2);
  expect.at(0, 0) = Rational(-3);
  expect.at(0, 1) = -(lam - Rational(3)) / Rational(3);
  expect.at(1, 0) = Rational(3);
  expect.at(1, 1) = Rational(-1);
  CHECK(n1 == expect);

  // lambda = (T0)_00 = 3 zeroes row 0 of the first factor, leaving row 0 of S0(0)
  RatMat nz = n_lambda(1, Rational(3));
  CHECK(nz.at(0, 0) == Rational(-3));
  CHECK(nz.at(0, 1) == Rational(0));

  // c_k N(lambda_n(k)) = mu_n(k) c_k
  for (int twoL = 1; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    for (int n = 0; n <= 3; ++n) {
      MatPoly scr = mvop::monic_R(s, n) * conj_M(twoL);
      RatMat c0 = scr.eval(Rational(0));
      for (int k = 0; k <= twoL; ++k) {
        Rational lamk = lambda_scriptD(twoL, n).at(k, k);
        Rational mu = lambda_E(twoL, n).at(k, k);
        RatMat nl = n_lambda(twoL, lamk);
        for (int j = 0; j <= twoL; ++j) {
          Rational lhs(0);
          for (int q = 0; q <= twoL; ++q) lhs += c0.at(k, q) * nl.at(q, j);
          CHECK(lhs == mu * c0.at(k, j));
        }
      }
    }
  }
}

TEST_CASE("c coefficients: recurrence equals closed form") {
  // n = 0 start: binomials
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int k = 0; k <= twoL; ++k) {
      auto c = c_recurrence(twoL, k, 0);
      for (int j = 0; j <= twoL; ++j) CHECK(c[j] == Rational::binomial(k, j));
    }
  CHECK(c_closed(1, 0, 0, 1) == Rational(-3, 8));
  CHECK(c_recurrence(1, 0, 1)[0] == Rational(-3, 8));
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int k = 0; k <= twoL; ++k)
      for (int n = 0; n <= 4; ++n) {
        auto rec = c_recurrence(twoL, k, n);
        for (int j = 0; j <= twoL; ++j) {
          CHECK(rec[j] == c_closed(twoL, k, j, n));
          if (j > k + n) CHECK(rec[j] == Rational(0));
        }
      }
}

TEST_CASE("c_k0 absolute value and sign") {
  for (int twoL = 1; twoL <= 4; ++twoL)
    for (int k = 0; k <= twoL; ++k)
      for (int n = 0; n <= 4; ++n) {
        Rational c = c_closed(twoL, k, 0, n);
        CHECK(c.sign() == (n % 2 ? -1 : 1));
        Rational sq = Rational(1, 4).pow(2 * n) * Rational::factorial(n).pow(2) *
                      Rational::pochhammer(Rational(twoL + 2), n).pow(2) /
                      (Rational::pochhammer(Rational(k + 1), n).pow(2) *
                       Rational::pochhammer(Rational(twoL - k + 1), n).pow(2));
        CHECK(c * c == sq);
      }
}

TEST_CASE("script factorizations") {
  // n = 0 reduces to the triangular factor itself
  for (int twoL = 0; twoL <= 3; ++twoL) CHECK(scriptR_factorization_check(twoL, 0));
  // twoL=1, n=1 entry (0,0): (3/4) u - 3/8
  WeightSpec s1{1};
  MatPoly scr = mvop::monic_R(s1, 1) * conj_M(1);
  CHECK(scr.at(0, 0) == Poly::monomial(1, Rational(3, 4)) + Poly::constant(Rational(-3, 8)));
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int n = 0; n <= 4; ++n) {
      CHECK(scriptR_factorization_check(twoL, n));
      CHECK(scriptP_gegenbauer_check(twoL, n));
    }
}

TEST_CASE("c coefficient orthogonality") {
  CHECK(c_orthogonality_check(1, 0, 0, 0));
  CHECK(c_orthogonality_check(1, 1, 0, 1));
  CHECK(c_orthogonality_check(1, 1, 1, 0));
  for (int twoL = 1; twoL <= 4; ++twoL)
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= twoL; ++k) CHECK(c_orthogonality_check(twoL, n, m, k));
}

TEST_CASE("composition is associative and matches repeated application") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> cnum(-4, 4), cden(1, 4), dg(0, 2);
  auto rand_poly = [&] {
    int d = dg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(cnum(rng), cden(rng));
    return Poly(std::move(c));
  };
  auto rand_op = [&](int dim, int order) {
    MatDiffOp op;
    for (int i = 0; i <= order; ++i)
      op.coeffs.push_back(MatPoly::from(dim, dim, [&](int, int) { return rand_poly(); }));
    return op;
  };
  for (int rep = 0; rep < 5; ++rep) {
    MatDiffOp a = rand_op(2, 1), b = rand_op(2, 2), c = rand_op(2, 1);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    MatPoly p = MatPoly::from(2, 2, [&](int, int) { return rand_poly(); });
    CHECK(apply_right(p, compose(a, b)) == apply_right(apply_right(p, a), b));
  }
}
