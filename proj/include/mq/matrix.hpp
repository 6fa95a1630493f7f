#pragma once

#include <cstddef>
#include <vector>

#include "mq/ints.hpp"

namespace mq {

// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row a += c * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Exact determinant by Bareiss fraction-free elimination.
  Int determinant() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntMatrix& m);

}  // namespace mq
