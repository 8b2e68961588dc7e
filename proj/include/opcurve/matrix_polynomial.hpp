#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcurve/extended_nat.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// A matrix polynomial L(lambda) = sum_i T_i lambda^i with n x n rational
// coefficient matrices and nonzero top coefficient. Immutable once built.
class MatrixPolynomial {
 public:
  MatrixPolynomial(std::size_t n, std::vector<RationalMatrix> coefficients)
      : n_(n), coeff_(std::move(coefficients)) {
    if (n_ == 0) throw std::invalid_argument("matrix size must be positive");
    for (const auto& t : coeff_)
      if (t.rows() != n_ || t.cols() != n_)
        throw std::invalid_argument("coefficient matrix has wrong shape");
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    if (coeff_.empty())
      throw std::invalid_argument("zero matrix polynomial is not allowed");
  }

  // The pencil lambda*I - T of classical spectral theory.
  static MatrixPolynomial pencil_from_operator(const RationalMatrix& t) {
    if (!t.is_square()) throw std::invalid_argument("operator must be square");
    std::vector<RationalMatrix> coeff{Rational(-1) * t,
                                      RationalMatrix::identity(t.rows())};
    return MatrixPolynomial(t.rows(), std::move(coeff));
  }

  // Build from row-major entry polynomials.
  static MatrixPolynomial from_entries(std::size_t n,
                                       const std::vector<UniPoly>& entries) {
    if (entries.size() != n * n)
      throw std::invalid_argument("entry list has wrong length");
    std::size_t degree = 0;
    for (const auto& e : entries)
      if (const auto d = e.degree())
        degree = std::max(degree, static_cast<std::size_t>(*d));
    std::vector<RationalMatrix> coeff(degree + 1, RationalMatrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k <= degree; ++k)
          coeff[k].at(i, j) = entries[i * n + j].coefficient(static_cast<int>(k));
    return MatrixPolynomial(n, std::move(coeff));
  }

  std::size_t size() const { return n_; }
  const std::vector<RationalMatrix>& coefficients() const { return coeff_; }

  // Entry (i, j) as a univariate polynomial.
  UniPoly entry(std::size_t i, std::size_t j) const {
    std::vector<Rational> c;
    c.reserve(coeff_.size());
    for (const auto& t : coeff_) c.push_back(t.at(i, j));
    return UniPoly::from_coefficients(std::move(c));
  }

  // Entries flattened row-major: index (i-1)*n + (j-1) holds entry (i, j).
  // This layout is shared with the generic determinant's variables and the
  // evaluation points handed to the local-multiplicity machinery.
  std::vector<UniPoly> entries_row_major() const {
    std::vector<UniPoly> out;
    out.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.push_back(entry(i, j));
    return out;
  }

  // Max entrywise degree. Equals the coefficient degree m: the top matrix is
  // nonzero, so some entry realizes lambda^m exactly.
  std::size_t degree() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const auto deg = entry(i, j).degree();
        if (deg) d = std::max(d, static_cast<std::size_t>(*deg));
      }
    return d;
  }

  RationalMatrix evaluate(const Rational& x) const {
    RationalMatrix acc(n_, n_);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
      acc = x * acc + *it;
    return acc;
  }

  bool is_monic() const {
    return coeff_.back() == RationalMatrix::identity(n_);
  }

 private:
  std::size_t n_;
  std::vector<RationalMatrix> coeff_;
};

// det(L(lambda)) as an exact polynomial, by fraction-free Bareiss elimination
// over k[lambda]; every division in the sweep is exact by Sylvester's
// identity.
inline UniPoly determinant(const MatrixPolynomial& L) {
  const std::size_t n = L.size();
  std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = L.entry(i, j);

  bool negate = false;
  UniPoly previous_pivot(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return UniPoly();
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly numerator = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = numerator.is_zero() ? UniPoly()
                                      : exact_divide(numerator, previous_pivot);
      }
      a[i][k] = UniPoly();
    }
    previous_pivot = a[k][k];
  }
  UniPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

inline bool identically_singular(const MatrixPolynomial& L) {
  return determinant(L).is_zero();
}

// Finite spectrum of L, kept exact: rational eigenvalues explicitly, the rest
// bundled into monic square-free factors with multiplicities.
struct SpectrumReport {
  UniPoly det;
  bool identically_singular = false;
  std::vector<std::pair<Rational, int>> rational_eigenvalues;
  std::vector<std::pair<UniPoly, int>> factor_table;  // square-free, monic
  std::int64_t total_finite_multiplicity = 0;  // = deg(det) when not singular
};

inline SpectrumReport spectrum(const MatrixPolynomial& L) {
  SpectrumReport report;
  report.det = determinant(L);
  report.identically_singular = report.det.is_zero();
  if (report.identically_singular) return report;
  report.total_finite_multiplicity = *report.det.degree();
  if (*report.det.degree() > 0) {
    report.rational_eigenvalues = rational_roots(report.det);
    report.factor_table = squarefree_factor(report.det).factors;
  }
  return report;
}

// ord at lambda0 of det(L); infinity exactly when L is identically singular.
inline ExtendedNat algebraic_multiplicity(const MatrixPolynomial& L,
                                          const Rational& lambda0) {
  return ord_at(determinant(L), lambda0);
}

}  // namespace opcurve
