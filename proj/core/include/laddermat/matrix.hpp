#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "laddermat/rational.hpp"

namespace laddermat {

// Dense matrix of exact rationals, row-major storage. All public indices are
// 1-based; Ladder cells, minors and permutations use the same convention.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  // Row-of-rows literal, mainly for tests: {{1, 2}, {3, 4}}.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // 1-based access; throws index_error when out of range.
  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;

  // Matrix product; inner dimensions must agree.
  RationalMatrix operator*(const RationalMatrix& other) const;

  // Submatrix with the given 1-based row/column indices, each strictly
  // increasing. Duplicates or out-of-range indices throw.
  RationalMatrix submatrix(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;  // rows_ * cols_, row-major

  void check_index(std::size_t i, std::size_t j) const;
};

// Exact determinant by fraction-free Bareiss elimination with first-nonzero
// pivoting. Square input required.
Rational determinant(const RationalMatrix& m);

// Rank over the rationals via the same elimination, column-major pivot scan.
std::size_t rank(const RationalMatrix& m);

// determinant(m.submatrix(rows, cols)); #rows == #cols required, indices
// taken in increasing order.
Rational minor_det(const RationalMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols);

}  // namespace laddermat
