#include "lierep/matrix.hpp"

#include <utility>

namespace lierep {

Matrix<Rational> to_rational(const Matrix<int>& m) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

Matrix<Rational> operator*(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch in product");
  Matrix<Rational> c(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse of a non-square matrix");
  Matrix<Rational> a = m;
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a(row, col) == 0) continue;
      const Rational f = a(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(row, j) -= f * a(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace lierep
