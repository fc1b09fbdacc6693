#ifndef BREDON_MATRIX_HPP
#define BREDON_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bredon/numeric.hpp"

namespace bredon {

// Dense matrix over arbitrary-precision integers with optional basis labels
// (labels are carried along for reporting, never used in arithmetic).
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix scaled(const Integer& c) const;
  bool operator==(const IntegerMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
  }

  // Adds c * block into this at the given offset; block must fit.
  void add_block(std::size_t row0, std::size_t col0, const IntegerMatrix& block,
                 const Integer& c = 1);

  IntegerMatrix submatrix(const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) const;

  // Determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> entries_;
};

// D = U * A * V with U, V unimodular and diagonal entries d_1 | d_2 | ... | d_s > 0.
struct SmithNormalForm {
  IntegerMatrix U;  // rows(A) x rows(A)
  IntegerMatrix V;  // cols(A) x cols(A)
  IntegerMatrix D;  // rows(A) x cols(A)
  std::vector<Integer> divisors;  // the nonzero diagonal, in chain order
  std::size_t rank() const { return divisors.size(); }
};

// Deterministic elimination: minimal |pivot| with (row, col) tie-break, all
// arithmetic exact.
SmithNormalForm smith_normal_form(const IntegerMatrix& a);

// Rank by exact rational elimination; independent of the SNF path.
std::size_t rational_rank(const IntegerMatrix& a);

}  // namespace bredon

#endif
