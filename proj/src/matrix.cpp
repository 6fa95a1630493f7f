#include "mq/matrix.hpp"

#include <utility>

namespace mq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw parse_error("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw internal_error("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw internal_error("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (m(t, t) == 0) {
      std::size_t p = t + 1;
      while (p < n && m(p, t) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(t, p);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        m(i, j) = exact_div(m(t, t) * m(i, j) - m(i, t) * m(t, j), prev);
    prev = m(t, t);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw internal_error("row-vector product shape mismatch");
  std::vector<Int> out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

}  // namespace mq
