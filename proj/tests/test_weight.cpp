#include "doctest.h"
#include "mvcheb/special.hpp"
#include "mvcheb/weight.hpp"

using namespace mvcheb;
using namespace mvcheb::weight;

TEST_CASE("alpha coefficients") {
  WeightSpec s{1};
  CHECK(alpha_coeff(s, 0, 0, 0) == Rational(2));
  CHECK(alpha_coeff(s, 1, 1, 0) == Rational(0));  // (n-2l)_1 = 0
  CHECK(alpha_coeff(s, 1, 1, 1) == Rational(2));
  CHECK_THROWS(alpha_coeff(s, 1, 0, 0));   // m > n
  CHECK_THROWS(alpha_coeff(s, 1, 1, 2));   // t > m
  CHECK_THROWS(alpha_coeff(s, 1, 2, 0));   // n > twoL
}

TEST_CASE("weight polynomial part") {
  MatPoly w1 = weight_poly(WeightSpec{1});
  CHECK(w1.at(0, 0) == Poly::constant(Rational(2)));
  CHECK(w1.at(0, 1) == Poly::monomial(1, Rational(2)));
  CHECK(w1.at(1, 0) == Poly::monomial(1, Rational(2)));
  CHECK(w1.at(1, 1) == Poly::constant(Rational(2)));

  CHECK(weight_poly(WeightSpec{0}).at(0, 0) == Poly::one());

  // degree of the (n,m) entry is n+m whenever n+m <= 2l
  for (int twoL = 1; twoL <= 5; ++twoL) {
    MatPoly w = weight_poly(WeightSpec{twoL});
    for (int n = 0; n <= twoL; ++n)
      for (int m = 0; m <= twoL; ++m)
        if (n + m <= twoL) CHECK(w.at(n, m).degree() == n + m);
  }
}

TEST_CASE("weight symmetry and J-commutation") {
  for (int twoL = 0; twoL <= 6; ++twoL) {
    MatPoly w = weight_poly(WeightSpec{twoL});
    CHECK(w.is_symmetric());
    CHECK(w.jconj() == w);
  }
}

TEST_CASE("weight positive definite at sample points") {
  for (int twoL = 0; twoL <= 6; ++twoL) {
    WeightSpec s{twoL};
    CHECK(positive_definite_at(s, Rational(-9, 10)));
    CHECK(positive_definite_at(s, Rational(0)));
    CHECK(positive_definite_at(s, Rational(1, 2)));
  }
}

TEST_CASE("lower-triangular factor") {
  WeightSpec s{1};
  MatPoly l = lower_L(s);
  CHECK(l.at(0, 0) == Poly::one());
  CHECK(l.at(1, 1) == Poly::one());
  CHECK(l.at(0, 1).is_zero());
  CHECK(l.at(1, 0) == Poly::x());
  for (int twoL = 0; twoL <= 5; ++twoL) {
    MatPoly m = lower_L(WeightSpec{twoL});
    for (int i = 0; i <= twoL; ++i) {
      CHECK(m.at(i, i) == Poly::one());
      for (int j = i + 1; j <= twoL; ++j) CHECK(m.at(i, j).is_zero());
    }
  }
}

TEST_CASE("diagonal factor values and positivity") {
  for (int twoL = 0; twoL <= 6; ++twoL) {
    auto t = diag_T(WeightSpec{twoL});
    CHECK(t[0].first == Rational(twoL + 1));  // c_0 = 2l+1
    for (int k = 0; k <= twoL; ++k) {
      CHECK(t[k].second == k);
      CHECK(t[k].first > Rational(0));
    }
  }
  CHECK(diag_T(WeightSpec{1})[1].first == Rational(2));
}

TEST_CASE("LDU factorization verifies exactly") {
  for (int twoL = 0; twoL <= 6; ++twoL) CHECK(verify_ldu(WeightSpec{twoL}));
}

TEST_CASE("beta closed form matches the Racah-sum route") {
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int n = 0; n <= twoL; ++n)
      for (int m = 0; m <= n; ++m)
        for (int k = 0; k <= m; ++k)
          CHECK(mvcheb::special::beta_via_racah(twoL, m, n, k) == beta_closed(twoL, m, n, k));
}

TEST_CASE("determinant of the weight") {
  auto r1 = det_weight(WeightSpec{1});
  CHECK(r1.constant == Rational(4));
  CHECK(r1.exponent == Rational(2));
  CHECK(r1.exponent_ok);
  auto r0 = det_weight(WeightSpec{0});
  CHECK(r0.constant == Rational(1));
  CHECK(r0.exponent == Rational(1, 2));
  CHECK(r0.exponent_ok);
  for (int twoL = 2; twoL <= 5; ++twoL) {
    auto r = det_weight(WeightSpec{twoL});
    CHECK(r.exponent == Rational((twoL + 1) * (twoL + 1), 2));
    CHECK(r.exponent_ok);
  }
}

TEST_CASE("UDL factorization") {
  CHECK(udl_check(WeightSpec{0}));
  CHECK(udl_check(WeightSpec{1}));
  CHECK(udl_check(WeightSpec{3}));
  CHECK(udl_check(WeightSpec{4}));
}

TEST_CASE("racah integral identity incl. vanishing cases") {
  CHECK(racah_integral_check(0, 0, 0, 0));  // both sides pi/2
  CHECK(racah_integral_check(1, 1, 1, 2));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= m; ++k)
        for (int t = 0; t <= n; ++t) CHECK(racah_integral_check(k, t, m, n));
  CHECK_THROWS(racah_integral_check(1, 0, 0, 1));  // k > m
}

TEST_CASE("fourier expansion of the weight") {
  CHECK(cg_fourier_check(WeightSpec{0}, 0, 0));
  CHECK(cg_fourier_check(WeightSpec{1}, 1, 0));
  CHECK(cg_fourier_check(WeightSpec{2}, 2, 2));
  for (int twoL = 0; twoL <= 4; ++twoL)
    for (int n = 0; n <= twoL; ++n)
      for (int m = 0; m <= twoL; ++m) CHECK(cg_fourier_check(WeightSpec{twoL}, n, m));
}

TEST_CASE("generalized moments: integration vs closed form") {
  WeightSpec s1{1};
  PiMat m0 = generalized_moment(s1, 0);
  CHECK(m0.at(0, 0) == PiRational{Rational(1)});
  CHECK(m0.at(1, 1) == PiRational{Rational(1)});
  CHECK(m0.at(0, 1).is_zero());
  CHECK(generalized_moment(WeightSpec{0}, 0).at(0, 0) == PiRational{Rational(1, 2)});
  CHECK(generalized_moment(s1, 1).at(1, 0) == PiRational{Rational(-1, 4)});

  for (int twoL = 0; twoL <= 3; ++twoL)
    for (int p = 0; p <= 4; ++p) {
      WeightSpec s{twoL};
      CHECK(generalized_moment(s, p) == generalized_moment_closed(s, p));
    }
}

TEST_CASE("p=0 moment equals H0") {
  for (int twoL = 0; twoL <= 4; ++twoL) {
    WeightSpec s{twoL};
    PiMat m = generalized_moment(s, 0);
    CHECK(m.is_diagonal());
    for (int n = 0; n <= twoL; ++n) {
      Rational expect = Rational(1, 2) * Rational(twoL + 1).pow(2) /
                        (Rational(n + 1) * Rational(twoL - n + 1));
      CHECK(m.at(n, n) == PiRational{expect});
    }
  }
}

TEST_CASE("triangular factor inverts exactly at twoL=2") {
  MatPoly l = lower_L(WeightSpec{2});
  MatPoly inv = invert_unitriangular(l);
  CHECK(l * inv == MatPoly::identity(3));
  CHECK(inv * l == MatPoly::identity(3));
}
