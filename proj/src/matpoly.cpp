#include "mvcheb/matpoly.hpp"

#include <stdexcept>

namespace mvcheb {

MatPoly MatPoly::identity(int n) {
  MatPoly m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one();
  return m;
}

MatPoly MatPoly::from(int rows, int cols, std::function<Poly(int, int)> f) {
  MatPoly m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f(i, j);
  return m;
}

MatPoly MatPoly::from_ratmat(const RatMat& m) {
  return from(m.rows(), m.cols(), [&](int i, int j) { return Poly::constant(m.at(i, j)); });
}

MatPoly MatPoly::unit(int n, int r, int s, const Poly& p) {
  MatPoly m(n, n);
  m.at(r, s) = p;
  return m;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("MatPoly: shape mismatch");
  MatPoly r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("MatPoly: shape mismatch");
  MatPoly r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("MatPoly: shape mismatch");
  MatPoly r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

MatPoly operator*(const MatPoly& a, const Poly& p) {
  MatPoly r = a;
  for (auto& e : r.e_) e *= p;
  return r;
}

MatPoly operator*(const MatPoly& a, const Rational& s) {
  MatPoly r = a;
  for (auto& e : r.e_) e = e * s;
  return r;
}

MatPoly MatPoly::operator-() const {
  MatPoly r = *this;
  for (auto& e : r.e_) e = -e;
  return r;
}

MatPoly MatPoly::transpose() const {
  MatPoly r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

MatPoly MatPoly::derivative() const {
  MatPoly r = *this;
  for (auto& e : r.e_) e = e.derivative();
  return r;
}

MatPoly MatPoly::jconj() const {
  MatPoly r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - 1 - i, cols_ - 1 - j);
  return r;
}

bool MatPoly::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

MatPoly MatPoly::compose_affine(const Rational& c0, const Rational& c1) const {
  MatPoly r = *this;
  for (auto& e : r.e_) e = e.compose_affine(c0, c1);
  return r;
}

RatMat MatPoly::eval(const Rational& v) const {
  return RatMat::from(rows_, cols_, [&](int i, int j) { return at(i, j).eval(v); });
}

RatMat MatPoly::coeff_grid(long k) const {
  return RatMat::from(rows_, cols_, [&](int i, int j) { return at(i, j).coeff(k); });
}

long MatPoly::max_degree() const {
  long d = -1;
  for (const auto& e : e_) d = std::max(d, e.degree());
  return d;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero polynomial");
  if (a.is_zero()) return Poly();
  long da = a.degree(), db = b.degree();
  if (da < db) throw std::domain_error("poly_divexact: not divisible");
  std::vector<Rational> q(da - db + 1, Rational(0));
  Poly rem = a;
  Rational lb = b.leading();
  for (long k = da - db; k >= 0; --k) {
    Rational c = rem.coeff(k + db) / lb;
    q[k] = c;
    if (!c.is_zero()) rem -= Poly::monomial(static_cast<int>(k), c) * b;
  }
  if (!rem.is_zero()) throw std::domain_error("poly_divexact: not divisible");
  return Poly(std::move(q));
}

Poly matpoly_det(const MatPoly& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matpoly_det: non-square input");
  int n = m.rows();
  if (n == 0) return Poly::one();
  MatPoly a = m;
  Poly prev = Poly::one();
  Rational sign(1);
  for (int col = 0; col < n - 1; ++col) {
    if (a.at(col, col).is_zero()) {
      int piv = -1;
      for (int r = col + 1; r < n; ++r)
        if (!a.at(r, col).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Poly();  // singular column
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int j = col + 1; j < n; ++j) {
        Poly num = a.at(col, col) * a.at(r, j) - a.at(r, col) * a.at(col, j);
        a.at(r, j) = poly_divexact(num, prev);
      }
      a.at(r, col) = Poly();
    }
    prev = a.at(col, col);
  }
  return a.at(n - 1, n - 1) * sign;
}

MatPoly invert_unitriangular(const MatPoly& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert_unitriangular: non-square input");
  int n = m.rows();
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != Poly::one())
      throw std::invalid_argument("invert_unitriangular: diagonal entry is not 1");
    for (int j = i + 1; j < n; ++j)
      if (!m.at(i, j).is_zero())
        throw std::invalid_argument("invert_unitriangular: not lower triangular");
  }
  MatPoly inv = MatPoly::identity(n);
  // Forward substitution: inv(i,j) = -sum_{k<i} m(i,k) inv(k,j) for i > j.
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i) {
      Poly s;
      for (int k = j; k < i; ++k) s += m.at(i, k) * inv.at(k, j);
      inv.at(i, j) = -s;
    }
  return inv;
}

Poly reparam_x_to_u(const Poly& p) { return p.compose_affine(Rational(1), Rational(-2)); }

}  // namespace mvcheb
