#pragma once

#include <functional>
#include <vector>

#include "mvcheb/poly.hpp"
#include "mvcheb/ratmat.hpp"

namespace mvcheb {

/// Rectangular grid of Poly. Equality is entrywise coefficient equality.
class MatPoly {
 public:
  MatPoly() : rows_(0), cols_(0) {}
  MatPoly(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static MatPoly identity(int n);
  static MatPoly from(int rows, int cols, std::function<Poly(int, int)> f);
  static MatPoly from_ratmat(const RatMat& m);
  /// p * E_{rs} inside an n x n grid.
  static MatPoly unit(int n, int r, int s, const Poly& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return e_[i * cols_ + j]; }
  const Poly& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator-(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const MatPoly& a, const Poly& p);
  friend MatPoly operator*(const Poly& p, const MatPoly& a) { return a * p; }
  friend MatPoly operator*(const MatPoly& a, const Rational& s);
  friend MatPoly operator*(const Rational& s, const MatPoly& a) { return a * s; }
  MatPoly operator-() const;
  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

  MatPoly transpose() const;
  MatPoly derivative() const;
  /// J M J with J the antidiagonal involution (index reversal both ways).
  MatPoly jconj() const;
  bool is_zero() const;
  bool is_symmetric() const { return *this == transpose(); }

  /// Entrywise substitution t -> c0 + c1*t.
  MatPoly compose_affine(const Rational& c0, const Rational& c1) const;
  RatMat eval(const Rational& v) const;
  /// Coefficient of t^k as a constant grid.
  RatMat coeff_grid(long k) const;
  long max_degree() const;

 private:
  int rows_, cols_;
  std::vector<Poly> e_;
};

/// Exact determinant of a square polynomial matrix via fraction-free
/// (Bareiss) elimination over the polynomial ring.
Poly matpoly_det(const MatPoly& m);

/// Exact inverse of a unipotent lower-triangular polynomial matrix.
MatPoly invert_unitriangular(const MatPoly& m);

/// p(1 - 2u): switch from the interval [-1,1] to [0,1].
Poly reparam_x_to_u(const Poly& p);

/// Exact quotient a / b; throws when the division leaves a remainder.
Poly poly_divexact(const Poly& a, const Poly& b);

}  // namespace mvcheb
