#include "mvcheb/ratmat.hpp"

#include <stdexcept>

namespace mvcheb {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMat RatMat::diagonal(const std::vector<Rational>& d) {
  RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

RatMat RatMat::from(int rows, int cols, std::function<Rational(int, int)> f) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f(i, j);
  return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RatMat operator*(const RatMat& a, const Rational& s) {
  RatMat r = a;
  for (auto& e : r.e_) e *= s;
  return r;
}

RatMat RatMat::operator-() const {
  RatMat r = *this;
  for (auto& e : r.e_) e = -e;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMat::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool RatMat::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

std::optional<RatMat> RatMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
  int n = rows_;
  RatMat a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Rational p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rational RatMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("RatMat::det: not square");
  int n = rows_;
  RatMat a = *this;
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rational p = a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col) / p;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Rational RatMat::max_abs() const {
  Rational m(0);
  for (const auto& e : e_) {
    Rational a = e.abs();
    if (m < a) m = a;
  }
  return m;
}

}  // namespace mvcheb
