#include "mvcheb/integrate.hpp"

namespace mvcheb {

PiMat PiMat::from(int rows, int cols, std::function<PiRational(int, int)> f) {
  PiMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f(i, j);
  return m;
}

PiMat PiMat::diagonal(const std::vector<PiRational>& d) {
  PiMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool PiMat::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool PiMat::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

PiMat PiMat::jconj() const {
  PiMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - 1 - i, cols_ - 1 - j);
  return r;
}

PiRational halfcircle_moment(long n) {
  if (n % 2 != 0) return PiRational(Rational(0));
  long m = n / 2;
  // Beta(m + 1/2 + 1/2... ): int x^{2m} sqrt(1-x^2) = pi (1/2)_m / (2 (m+1)!)
  Rational c = Rational::pochhammer(Rational(1, 2), m) / (Rational(2) * Rational::factorial(m + 1));
  return PiRational(c);
}

PiRational integrate_halfcircle(const Poly& p) {
  PiRational r;
  for (long k = 0; k <= p.degree(); k += 2) r = r + halfcircle_moment(k) * p.coeff(k);
  return r;
}

PiMat integrate_halfcircle(const MatPoly& m) {
  return PiMat::from(m.rows(), m.cols(),
                     [&](int i, int j) { return integrate_halfcircle(m.at(i, j)); });
}

}  // namespace mvcheb
