#pragma once

#include <functional>
#include <vector>

#include "mvcheb/laurent.hpp"

namespace mvcheb::group {

/// Grid of Laurent polynomials in the torus coordinate w.
class LaurentMat {
 public:
  LaurentMat() : rows_(0), cols_(0) {}
  LaurentMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static LaurentMat from(int rows, int cols, std::function<LaurentPoly(int, int)> f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int i, int j) { return e_[i * cols_ + j]; }
  const LaurentPoly& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b);
  friend bool operator==(const LaurentMat& a, const LaurentMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  LaurentMat scale(const LaurentPoly& s) const;
  LaurentMat derivative() const;
  LaurentPoly det2() const;  // 2x2 only

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> e_;
};

/// Matrix coefficients of the degree-zero full spherical function on the
/// complexified torus; rows store p = -l + rowIndex ascending.
LaurentMat phi0(int twoL);

/// The two torus-side identities of phi0: the logarithmic-derivative
/// relation against sigma(w) and the weight-ordering relation against
/// upsilon(w) (cross-multiplied by w^4 - 1 to stay polynomial).
bool phi0_identity_checks(int twoL);

/// Builds the transposed torus-side operators from their printed matrices
/// and checks the affine relations onto the pair on [-1,1].
bool group_operator_relation_check(int twoL);

}  // namespace mvcheb::group
