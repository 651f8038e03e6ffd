#include "doctest.h"
#include "mvcheb/recurrence.hpp"
#include "mvcheb/special.hpp"

using namespace mvcheb;
using namespace mvcheb::mvop;

TEST_CASE("recurrence coefficient grids") {
  WeightSpec s1{1};
  RatMat x0 = recurrence_X(s1, 0);
  CHECK(x0.at(0, 0) == Rational(1, 2));
  CHECK(x0.at(1, 1) == Rational(1, 2));
  CHECK(x0.at(0, 1) == Rational(-1, 8));
  CHECK(x0.at(1, 0) == Rational(-1, 8));

  RatMat y1 = recurrence_Y(s1, 1);
  CHECK(y1 == RatMat::diagonal({Rational(3, 64), Rational(3, 64)}));

  WeightSpec s0{0};
  for (int n = 0; n <= 5; ++n) CHECK(recurrence_X(s0, n) == RatMat::diagonal({Rational(1, 2)}));
  for (int n = 1; n <= 5; ++n) CHECK(recurrence_Y(s0, n) == RatMat::diagonal({Rational(1, 16)}));
  CHECK_THROWS(recurrence_Y(s0, 0));
}

TEST_CASE("monic R on [0,1]") {
  WeightSpec s1{1};
  CHECK(monic_R(s1, 0) == MatPoly::identity(2));
  MatPoly r1 = monic_R(s1, 1);
  Poly um12 = Poly::x() - Poly::constant(Rational(1, 2));
  CHECK(r1.at(0, 0) == um12);
  CHECK(r1.at(1, 1) == um12);
  CHECK(r1.at(0, 1) == Poly::constant(Rational(1, 8)));
  CHECK(r1.at(1, 0) == Poly::constant(Rational(1, 8)));
  CHECK(monic_R(WeightSpec{0}, 1).at(0, 0) == um12);
}

TEST_CASE("monic P on [-1,1]") {
  WeightSpec s1{1};
  CHECK(monic_P(s1, 0) == MatPoly::identity(2));
  MatPoly p1 = monic_P(s1, 1);
  CHECK(p1.at(0, 0) == Poly::x());
  CHECK(p1.at(0, 1) == Poly::constant(Rational(-1, 4)));
  CHECK(p1.at(1, 0) == Poly::constant(Rational(-1, 4)));
  // scalar case: P_2 = monic U_2 = x^2 - 1/4
  CHECK(monic_P(WeightSpec{0}, 2).at(0, 0) ==
        Poly::monomial(2, Rational(1)) + Poly::constant(Rational(-1, 4)));
}

TEST_CASE("x-domain three-term recurrence holds") {
  for (int twoL = 0; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    for (int n = 1; n <= 4; ++n) {
      MatPoly pn = monic_P(s, n), pnm1 = monic_P(s, n - 1), pnp1 = monic_P(s, n + 1);
      RatMat x = recurrence_X(s, n), y = recurrence_Y(s, n);
      RatMat oneM2X = RatMat::identity(s.dim()) - x - x;
      MatPoly lhs = pn * Poly::x();
      MatPoly rhs = pnp1 + MatPoly::from_ratmat(oneM2X) * pn +
                    MatPoly::from_ratmat(y * Rational(4)) * pnm1;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("monicity, symmetry, degrees") {
  for (int twoL = 0; twoL <= 4; ++twoL) {
    WeightSpec s{twoL};
    auto seq = build_seq(s, 5);
    for (int n = 0; n <= 5; ++n) {
      const MatPoly& rn = seq.polys[n];
      CHECK(rn.coeff_grid(n) == RatMat::identity(s.dim()));
      CHECK(rn.max_degree() <= n);
      CHECK(rn.jconj() == rn);
      MatPoly pn = monic_P(s, n);
      CHECK(pn.coeff_grid(n) == RatMat::identity(s.dim()));
      CHECK(pn.jconj() == pn);
    }
  }
}

TEST_CASE("orthogonality and norms") {
  WeightSpec s1{1};
  CHECK(inner_product_W(s1, MatPoly::identity(2), MatPoly::identity(2)) ==
        PiMat::diagonal({PiRational{Rational(1)}, PiRational{Rational(1)}}));
  CHECK(inner_product_W(s1, monic_P(s1, 1), monic_P(s1, 0)).is_zero());
  CHECK(squared_norm_H(s1, 1).at(0, 0) == PiRational{Rational(3, 16)});
  CHECK(inner_product_W(s1, monic_P(s1, 1), monic_P(s1, 1)) == squared_norm_H(s1, 1));

  for (int twoL = 0; twoL <= 4; ++twoL) {
    WeightSpec s{twoL};
    std::vector<MatPoly> p;
    for (int n = 0; n <= 4; ++n) p.push_back(monic_P(s, n));
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        PiMat g = inner_product_W(s, p[n], p[m]);
        if (n == m)
          CHECK(g == squared_norm_H(s, n));
        else
          CHECK(g.is_zero());
      }
  }
  CHECK_THROWS(inner_product_W(s1, MatPoly::identity(3), MatPoly::identity(3)));
}

TEST_CASE("H_n closed form properties") {
  // scalar collapse: H_n = pi 2^{-2n-1}
  for (int n = 0; n <= 10; ++n)
    CHECK(squared_norm_H(WeightSpec{0}, n).at(0, 0) ==
          PiRational{Rational(1, 2) * Rational(1, 4).pow(n)});
  // H_0 from the weight's zeroth moment; H_n = 4 Y_n H_{n-1}; J H J = H
  for (int twoL = 0; twoL <= 4; ++twoL) {
    WeightSpec s{twoL};
    CHECK(squared_norm_H(s, 0) == weight::generalized_moment(s, 0));
    for (int n = 1; n <= 5; ++n) {
      PiMat h = squared_norm_H(s, n), hm = squared_norm_H(s, n - 1);
      RatMat y4 = recurrence_Y(s, n) * Rational(4);
      PiMat prod = PiMat::from(s.dim(), s.dim(), [&](int i, int j) {
        PiRational acc;
        for (int k = 0; k < s.dim(); ++k) acc = acc + hm.at(k, j) * y4.at(i, k);
        return acc;
      });
      CHECK(h == prod);
      CHECK(h.jconj() == h);
    }
  }
}

TEST_CASE("sub-leading coefficient closed forms match extraction") {
  WeightSpec s1{1};
  LeadingCoeffs lc1 = leading_coeffs(s1, 1);
  RatMat expect1(2, 2);
  expect1.at(0, 0) = Rational(-1, 2);
  expect1.at(1, 1) = Rational(-1, 2);
  expect1.at(0, 1) = Rational(1, 8);
  expect1.at(1, 0) = Rational(1, 8);
  CHECK(lc1.Rn1 == expect1);

  for (int twoL = 0; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    auto seq = build_seq(s, 5);
    for (int n = 1; n <= 5; ++n) {
      LeadingCoeffs lc = leading_coeffs(s, n);
      CHECK(lc.Rn1 == seq.polys[n].coeff_grid(n - 1));
      for (int j = 0; j < s.dim(); ++j) CHECK(lc.Rn1.at(j, j) == Rational(-n, 2));
      if (n >= 2) CHECK(lc.Rn2 == seq.polys[n].coeff_grid(n - 2));
    }
  }
  // scalar n=2: R^2_0 matches the u^0 coefficient of 2^{-2} U_2 reparametrized
  Poly r2 = reparam_x_to_u(Rational(1, 16) * mvcheb::special::chebyshev_u(2));  // 2^{-2} U_2, reparametrized, carries another 2^{-2}
  CHECK(leading_coeffs(WeightSpec{0}, 2).Rn2.at(0, 0) == r2.coeff(0));
}

TEST_CASE("recurrence coefficients from sub-leading coefficients") {
  for (int twoL = 0; twoL <= 3; ++twoL) {
    WeightSpec s{twoL};
    for (int n = 2; n <= 4; ++n) {
      LeadingCoeffs a = leading_coeffs(s, n), b = leading_coeffs(s, n + 1);
      auto [x, y] = coeffs_to_recurrence(a.Rn1, b.Rn1, a.Rn2, b.Rn2);
      CHECK(x == recurrence_X(s, n));
      CHECK(y == recurrence_Y(s, n));
    }
    // n=1 edge: R_{-1}=0 means Y_1 still reproduces via zero Rn2 of degree-1 polys
    LeadingCoeffs a = leading_coeffs(s, 1), b = leading_coeffs(s, 2);
    auto [x, y] = coeffs_to_recurrence(a.Rn1, b.Rn1, a.Rn2, b.Rn2);
    CHECK(x == recurrence_X(s, 1));
    CHECK(y == recurrence_Y(s, 1));
  }
  // scalar pattern (1/2, 1/16)
  auto [x, y] = coeffs_to_recurrence(leading_coeffs(WeightSpec{0}, 2).Rn1,
                                     leading_coeffs(WeightSpec{0}, 3).Rn1,
                                     leading_coeffs(WeightSpec{0}, 2).Rn2,
                                     leading_coeffs(WeightSpec{0}, 3).Rn2);
  CHECK(x == RatMat::diagonal({Rational(1, 2)}));
  CHECK(y == RatMat::diagonal({Rational(1, 16)}));
}

TEST_CASE("Nevai limits at twoL=4") {
  WeightSpec s{4};
  Rational prevX, prevY;
  for (int n = 10; n <= 200; ++n) {
    RatMat dx = recurrence_X(s, n) - RatMat::diagonal(std::vector<Rational>(5, Rational(1, 2)));
    RatMat dy = recurrence_Y(s, n) - RatMat::diagonal(std::vector<Rational>(5, Rational(1, 16)));
    Rational mx = dx.max_abs(), my = dy.max_abs();
    if (n > 10) {
      CHECK(mx <= prevX);
      CHECK(my <= prevY);
    }
    prevX = mx;
    prevY = my;
  }
  CHECK(prevX < Rational(3, 10) / Rational(200));
  CHECK(prevY < Rational(3, 10) / Rational(200));
}
