#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mvcheb/rational.hpp"

namespace mvcheb {

/// Dense matrix over Rational.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static RatMat identity(int n);
  static RatMat diagonal(const std::vector<Rational>& d);
  static RatMat from(int rows, int cols, std::function<Rational(int, int)> f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const Rational& s);
  friend RatMat operator*(const Rational& s, const RatMat& a) { return a * s; }
  RatMat operator-() const;
  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

  RatMat transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  /// Exact inverse via Gauss-Jordan with full pivot search for a nonzero
  /// entry. Returns nullopt when singular.
  std::optional<RatMat> inverse() const;
  Rational det() const;

  /// Largest |entry| as Rational (for convergence-style bounds).
  Rational max_abs() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace mvcheb
