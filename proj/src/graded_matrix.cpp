#include "splinedim/graded_matrix.hpp"

#include <stdexcept>

namespace splinedim {

namespace {

std::vector<BasisBlock> lay_out(const std::vector<GradedMatrix::BlockSpec>& specs, std::size_t& total) {
  std::vector<BasisBlock> blocks;
  total = 0;
  for (const auto& spec : specs) {
    const auto size = static_cast<std::size_t>(monomial_count(spec.degree));
    blocks.push_back(BasisBlock{spec.label, spec.degree, total, size});
    total += size;
  }
  return blocks;
}

}  // namespace

GradedMatrix::GradedMatrix(const std::vector<BlockSpec>& row_blocks, const std::vector<BlockSpec>& col_blocks) {
  row_blocks_ = lay_out(row_blocks, rows_);
  col_blocks_ = lay_out(col_blocks, cols_);
  entries_.resize(rows_ * cols_);
}

void GradedMatrix::add_multiplication(std::size_t row_block, std::size_t col_block, const Form& f,
                                      const Rational& sign) {
  const auto& rb = row_blocks_.at(row_block);
  const auto& cb = col_blocks_.at(col_block);
  if (rb.degree != cb.degree + f.degree()) throw std::invalid_argument("block degrees do not match the form");
  if (cb.size == 0) return;
  const MonomialBasis src(cb.degree);
  const MonomialBasis fb(f.degree());
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (std::size_t t = 0; t < fb.size(); ++t) {
      const auto& coef = f.coefficients()[t];
      if (coef == 0) continue;
      const auto r = MonomialBasis::index(rb.degree, src[c][0] + fb[t][0], src[c][1] + fb[t][1]);
      at(rb.offset + r, cb.offset + c) += sign * coef;
    }
  }
}

void GradedMatrix::add_identity(std::size_t row_block, std::size_t col_block, const Rational& sign) {
  const auto& rb = row_blocks_.at(row_block);
  const auto& cb = col_blocks_.at(col_block);
  if (rb.degree != cb.degree) throw std::invalid_argument("identity between blocks of different degree");
  for (std::size_t i = 0; i < rb.size; ++i) at(rb.offset + i, cb.offset + i) += sign;
}

GradedMatrix GradedMatrix::transpose() const {
  GradedMatrix t;
  t.row_blocks_ = col_blocks_;
  t.col_blocks_ = row_blocks_;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.entries_.resize(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

GradedMatrix multiplication_matrix(const Form& f, int k) {
  if (f.is_zero()) throw std::invalid_argument("multiplication by the zero form");
  if (k < 0) throw std::invalid_argument("negative source degree");
  GradedMatrix m({{"target", k + f.degree()}}, {{"source", k}});
  m.add_multiplication(0, 0, f);
  return m;
}

}  // namespace splinedim
