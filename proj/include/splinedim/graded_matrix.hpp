#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "splinedim/polynomial.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

/// A labeled run of rows or columns carrying one monomial basis.
struct BasisBlock {
  std::string label;
  int degree = 0;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Dense exact matrix between direct sums of graded pieces R_d. Row and
/// column index spaces are concatenations of labeled MonomialBasis blocks.
class GradedMatrix {
 public:
  struct BlockSpec {
    std::string label;
    int degree;
  };

  GradedMatrix() = default;
  GradedMatrix(const std::vector<BlockSpec>& row_blocks, const std::vector<BlockSpec>& col_blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<BasisBlock>& row_blocks() const { return row_blocks_; }
  const std::vector<BasisBlock>& col_blocks() const { return col_blocks_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Writes the columns of p -> sign * f * p, p ranging over the monomials of
  /// degree col_block.degree, into rows of row_block (degree deg f + that).
  void add_multiplication(std::size_t row_block, std::size_t col_block, const Form& f, const Rational& sign = 1);
  /// Adds sign * identity between two blocks of equal degree.
  void add_identity(std::size_t row_block, std::size_t col_block, const Rational& sign = 1);

  GradedMatrix transpose() const;

 private:
  std::vector<BasisBlock> row_blocks_;
  std::vector<BasisBlock> col_blocks_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Matrix of R_k -> R_{k+d}, p -> f * p for a nonzero form f of degree d.
GradedMatrix multiplication_matrix(const Form& f, int k);

}  // namespace splinedim
