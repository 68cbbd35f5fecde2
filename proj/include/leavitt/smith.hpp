#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "leavitt/bigint.hpp"

namespace leavitt {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  BigInt const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, BigInt const& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, BigInt const& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::vector<BigInt> row(std::size_t r) const;
  // this * x
  std::vector<BigInt> apply(std::vector<BigInt> const& x) const;

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Square only.
BigInt determinant(IntMatrix const& m);

struct SmithForm {
  IntMatrix diagonal;  // S = U * M * V, same shape as M
  IntMatrix left;      // U, rows x rows, unimodular
  IntMatrix right;     // V, cols x cols, unimodular
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> divisors() const;
};

SmithForm smith_normal_form(IntMatrix const& m);

// Checks U*M*V == S, |det U| = |det V| = 1, S diagonal with a nonnegative
// divisor chain whose nonzero entries come first.
bool is_valid_smith_form(IntMatrix const& m, SmithForm const& form);

}  // namespace leavitt
