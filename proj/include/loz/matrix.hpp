#pragma once

#include <cstddef>
#include <vector>

#include "loz/exact.hpp"

namespace loz {

// Dense matrix of exact rationals. The 0x0 matrix is legal and has
// determinant 1 (empty product convention).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, ExactRational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExactRational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const ExactRational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactRational> entries_;
};

// Exact determinant of a square matrix. Column denominators are cleared to
// integers, the integer matrix is eliminated fraction-free (every interior
// division is exact), and the result is rescaled. Throws domain_error on a
// non-square input. The OpenMP variant splits the row updates; both return
// bit-identical values.
ExactRational exact_determinant(const RationalMatrix& m);
ExactRational exact_determinant_serial(const RationalMatrix& m);

}  // namespace loz
