#pragma once

#include <string>
#include <vector>

#include "qhd/cyclotomic.hpp"

namespace qhd {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Integer& k);
  void add_col(std::size_t a, std::size_t b, const Integer& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  /// Leading principal k x k submatrix.
  IntMatrix leading(std::size_t k) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Bareiss fraction-free determinant.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V == D
  /// Diagonal entries of D (min(rows, cols) of them), each dividing the next.
  std::vector<Integer> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact inverse of a nonsingular integer matrix, as rationals.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m);

}  // namespace qhd
