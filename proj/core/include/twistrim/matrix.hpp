#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistrim/laurent_poly.hpp"

namespace twistrim {

/// Dense row-major matrix over a commutative ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  /// Copy with one row and one column removed.
  Matrix without(std::size_t row, std::size_t col) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<LaurentPoly>;

namespace detail {

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

inline Integer exact_quotient(const Integer& num, const Integer& den) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}
inline LaurentPoly exact_quotient(const LaurentPoly& num, const LaurentPoly& den) {
  return divexact(num, den);
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant of a square matrix. Every division
/// is exact in the coefficient ring, so no fractions ever appear.
template <typename T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return T(Integer(1));
  bool negate = false;
  T prev(Integer(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && detail::is_zero(m(swap, k))) ++swap;
      if (swap == n) return T();
      m.swap_rows(k, swap);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = detail::exact_quotient(v, prev);
      }
      m(i, k) = T();
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace twistrim
