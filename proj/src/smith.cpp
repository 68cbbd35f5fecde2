#include "leavitt/smith.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace leavitt {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, BigInt const& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, BigInt const& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<BigInt> IntMatrix::apply(std::vector<BigInt> const& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in IntMatrix::apply");
  std::vector<BigInt> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in IntMatrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

BigInt determinant(IntMatrix const& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t const n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::divisors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
std::optional<Position> smallest_entry(IntMatrix const& s, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < s.rows(); ++i) {
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      BigInt a = abs_big(s(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& s = f.diagonal;
  IntMatrix& u = f.left;
  IntMatrix& v = f.right;
  std::size_t const steps = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = smallest_entry(s, t);
    if (!pivot) break;
    for (;;) {
      s.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      s.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      // Truncating division leaves remainders smaller than the pivot, so
      // repeating with the smallest entry terminates.
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        BigInt q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && s(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        BigInt q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && s(t, j) == 0;
      }
      if (clean) {
        // Enforce d_t | every trailing entry by folding an offending row in.
        std::optional<std::size_t> offending;
        for (std::size_t i = t + 1; i < s.rows() && !offending; ++i) {
          for (std::size_t j = t + 1; j < s.cols(); ++j) {
            if (s(i, j) % s(t, t) != 0) {
              offending = i;
              break;
            }
          }
        }
        if (!offending) break;
        s.add_row_multiple(t, *offending, 1);
        u.add_row_multiple(t, *offending, 1);
      }
      pivot = smallest_entry(s, t);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
    f.rank = t + 1;
  }
#ifdef LEAVITT_VERIFY_SMITH
  if (!is_valid_smith_form(m, f)) throw std::logic_error("smith_normal_form postcondition failed");
#endif
  return f;
}

bool is_valid_smith_form(IntMatrix const& m, SmithForm const& f) {
  if (f.left.rows() != m.rows() || f.left.cols() != m.rows()) return false;
  if (f.right.rows() != m.cols() || f.right.cols() != m.cols()) return false;
  if (f.left * m * f.right != f.diagonal) return false;
  if (abs_big(determinant(f.left)) != 1 || abs_big(determinant(f.right)) != 1) return false;
  IntMatrix const& s = f.diagonal;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && s(i, j) != 0) return false;
    }
  }
  std::size_t const steps = std::min(s.rows(), s.cols());
  for (std::size_t i = 0; i < steps; ++i) {
    bool const nonzero = i < f.rank;
    if (nonzero != (s(i, i) != 0) || s(i, i) < 0) return false;
    if (i + 1 < f.rank && s(i + 1, i + 1) % s(i, i) != 0) return false;
  }
  return true;
}

}  // namespace leavitt
