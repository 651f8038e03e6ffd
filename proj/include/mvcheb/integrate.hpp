#pragma once

#include <functional>
#include <vector>

#include "mvcheb/matpoly.hpp"
#include "mvcheb/poly.hpp"
#include "mvcheb/rational.hpp"

namespace mvcheb {

/// Grid of exact pi-multiples (inner products, norms, moments).
class PiMat {
 public:
  PiMat() : rows_(0), cols_(0) {}
  PiMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static PiMat from(int rows, int cols, std::function<PiRational(int, int)> f);
  static PiMat diagonal(const std::vector<PiRational>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PiRational& at(int i, int j) { return e_[i * cols_ + j]; }
  const PiRational& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend bool operator==(const PiMat& a, const PiMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PiMat& a, const PiMat& b) { return !(a == b); }

  bool is_zero() const;
  bool is_diagonal() const;
  PiMat jconj() const;

 private:
  int rows_, cols_;
  std::vector<PiRational> e_;
};

/// Integral over [-1,1] of x^n sqrt(1-x^2) dx: zero for odd n,
/// pi (1/2)_m / (2 (m+1)!) for n = 2m.
PiRational halfcircle_moment(long n);

/// Integral over [-1,1] of p(x) sqrt(1-x^2) dx, exactly.
PiRational integrate_halfcircle(const Poly& p);

/// Entrywise integrate_halfcircle of a polynomial grid.
PiMat integrate_halfcircle(const MatPoly& m);

}  // namespace mvcheb
