#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcurve/rational.hpp"

namespace opcurve {

// Dense matrix over the rationals with exact elimination routines.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}

  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    require_same_shape(a, b);
    RationalMatrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }

  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    require_same_shape(a, b);
    RationalMatrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }

  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
    return c;
  }

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void require_same_shape(const RationalMatrix& a,
                                 const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline RationalMatrix matrix_power(const RationalMatrix& m, unsigned e) {
  if (!m.is_square()) throw std::domain_error("power of non-square matrix");
  RationalMatrix acc = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row. Deterministic: the first nonzero entry of each column is the pivot.
inline std::vector<std::size_t> reduced_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return reduced_row_echelon(work).size();
}

// dim ker(M) for square M, via exact row reduction.
inline std::size_t nullspace_dim(const RationalMatrix& m) {
  if (!m.is_square())
    throw std::domain_error("nullspace dimension of non-square matrix");
  return m.cols() - rank(m);
}

// Basis of ker(M) as columns-of-coefficients vectors (free-variable basis).
inline std::vector<std::vector<Rational>> nullspace_basis(
    const RationalMatrix& m) {
  RationalMatrix work = m;
  const auto pivots = reduced_row_echelon(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -work.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact inverse; throws std::domain_error when singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = reduced_row_echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Exact determinant of a scalar matrix (fraction-free on the echelon pivots).
inline Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::domain_error("determinant of non-square matrix");
  RationalMatrix work = m;
  Rational det(1);
  const std::size_t n = work.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(work.at(pivot, j), work.at(col, j));
      det = -det;
    }
    det *= work.at(col, col);
    const Rational inv = 1 / work.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work.at(i, col) == 0) continue;
      const Rational f = work.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        work.at(i, j) -= f * work.at(col, j);
    }
  }
  return det;
}

}  // namespace opcurve
