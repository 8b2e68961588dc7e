#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// Seeded generator of random desk-scale instances, shared by the property
// suites and the CLI's random: pseudo-inputs. All draws go through the raw
// mt19937_64 stream, so a seed pins the instance on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational small_rational(long max_abs_num = 4, long max_den = 2) {
    return rational(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
  }

  RationalMatrix matrix(std::size_t n, long lo = -4, long hi = 4) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rational(int_in(lo, hi));
    return m;
  }

  // Product of unit triangular matrices: invertible with an exact inverse.
  RationalMatrix invertible_matrix(std::size_t n) {
    RationalMatrix lo = RationalMatrix::identity(n);
    RationalMatrix up = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) {
        lo.at(i, k) = rational(int_in(-2, 2));
        up.at(k, i) = rational(int_in(-2, 2));
      }
    return lo * up;
  }

  struct SplitOperator {
    RationalMatrix t;
    std::vector<std::pair<Rational, int>> multiplicities;
  };

  // P J P^{-1} with an upper-triangular J: the diagonal is an independent
  // oracle for the spectrum and its multiplicities.
  SplitOperator split_operator(std::size_t n) {
    RationalMatrix j(n, n);
    std::vector<std::pair<Rational, int>> expected;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational value = rational(int_in(-1, 1));
      j.at(i, i) = value;
      bool merged = false;
      for (auto& [v, mult] : expected) {
        if (v == value) {
          ++mult;
          merged = true;
          break;
        }
      }
      if (!merged) expected.emplace_back(value, 1);
      for (std::size_t k = i + 1; k < n; ++k)
        j.at(i, k) = rational(int_in(-2, 2));
    }
    const RationalMatrix p = invertible_matrix(n);
    return {p * j * inverse(p), std::move(expected)};
  }

  // Degree-one operator line, never identically singular. Mixes fully random
  // pairs, triangular pairs (split spectrum), and monic pencils built from a
  // split operator (spectrum with known repeated eigenvalues).
  MatrixPolynomial pencil(std::size_t n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<RationalMatrix> coeff;
      switch (rng_() % 3) {
        case 0: {
          RationalMatrix t1 = matrix(n);
          if (t1.is_zero()) t1.at(0, 0) = 1;
          coeff = {matrix(n), std::move(t1)};
          break;
        }
        case 1: {
          RationalMatrix t0(n, n), t1(n, n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = i; k < n; ++k) {
              t0.at(i, k) = rational(int_in(-3, 3));
              t1.at(i, k) = rational(int_in(-3, 3));
            }
          for (std::size_t i = 0; i < n; ++i)
            if (t1.at(i, i) == 0) t1.at(i, i) = rational(int_in(1, 3));
          coeff = {std::move(t0), std::move(t1)};
          break;
        }
        default: {
          coeff = {Rational(-1) * split_operator(n).t,
                   RationalMatrix::identity(n)};
          break;
        }
      }
      MatrixPolynomial L(n, std::move(coeff));
      if (L.degree() == 1 && !identically_singular(L)) return L;
    }
    throw std::logic_error("failed to draw a non-degenerate pencil");
  }

  // 2x2 admissible degree-two curve with a planted rational eigenvalue. The
  // (1,2) entry is lambda + c, so the entry algebra always contains lambda.
  // With `double_eigenvalue`, the determinant is a multiple of
  // (lambda - root)^2.
  MatrixPolynomial admissible_quadratic(bool double_eigenvalue) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Rational root = small_rational(2, 2);
      const Rational c = small_rational(2, 1);
      const Rational d = small_rational(2, 1);
      const Rational e = small_rational(2, 1);
      Rational f = small_rational(2, 1);
      if (f == 0 || f == d) continue;
      // det = (f - d) s^2 + (f a - e - c d) s + (f b - c e)
      Rational a, b;
      if (double_eigenvalue) {
        a = (e + c * d - 2 * (f - d) * root) / f;
        b = (c * e + (f - d) * root * root) / f;
      } else {
        a = small_rational(2, 1);
        b = (c * e - (f - d) * root * root - (f * a - e - c * d) * root) / f;
      }
      const UniPoly s = UniPoly::variable();
      const std::vector<UniPoly> entries = {
          s * s + a * s + UniPoly(b), s + UniPoly(c), d * s + UniPoly(e),
          UniPoly(f)};
      MatrixPolynomial L = MatrixPolynomial::from_entries(2, entries);
      if (L.degree() == 2 && !identically_singular(L) &&
          determinant(L).evaluate(root) == 0)
        return L;
    }
    throw std::logic_error("failed to draw an admissible quadratic curve");
  }

  // Curve with entries of degree <= 2 and no admissibility filtering. Flavors
  // plant rational eigenvalues by scaling rows of a degree-<=1 base with
  // (lambda - root) factors, force repeated-square diagonals, or draw every
  // entry from k[(lambda - root)^2] (such curves are never admissible).
  MatrixPolynomial degree_two_curve(std::size_t n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const UniPoly s = UniPoly::variable();
      std::vector<UniPoly> entries(n * n);
      const Rational root = rational(int_in(-2, 2));
      const UniPoly factor = s - UniPoly(root);
      switch (rng_() % 5) {
        case 0:  // fully random degree <= 2
          for (auto& entry : entries)
            entry = UniPoly::from_coefficients({small_rational(3, 1),
                                                small_rational(2, 1),
                                                small_rational(2, 1)});
          break;
        case 1:  // one row scaled by (s - root)
          for (std::size_t k = 0; k < n * n; ++k)
            entries[k] = UniPoly::from_coefficients(
                {small_rational(3, 1), small_rational(2, 1)});
          for (std::size_t j = 0; j < n; ++j) entries[j] = factor * entries[j];
          break;
        case 2: {  // two rows scaled: multiplicity at least two
          for (std::size_t k = 0; k < n * n; ++k)
            entries[k] = UniPoly::from_coefficients(
                {small_rational(3, 1), small_rational(2, 1)});
          const std::size_t rows = n >= 2 ? 2 : 1;
          for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t j = 0; j < n; ++j)
              entries[r * n + j] = factor * entries[r * n + j];
          break;
        }
        case 3:  // squared factor on the diagonal, constants elsewhere
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              entries[i * n + j] =
                  (i == j) ? (i == 0 ? factor * factor
                                     : UniPoly::from_coefficients(
                                           {small_rational(3, 1),
                                            small_rational(2, 1)}))
                           : UniPoly(small_rational(1, 1));
          break;
        default: {  // entries a + b (s - root)^2: never admissible. The first
                    // row has no constant part, so s = root is an eigenvalue.
          const UniPoly square = factor * factor;
          for (auto& entry : entries)
            entry = UniPoly(small_rational(2, 1)) +
                    small_rational(1, 1) * square;
          for (std::size_t j = 0; j < n; ++j)
            entries[j] = small_rational(1, 1) * square;
          entries[0] = square;
          break;
        }
      }
      bool all_zero = true;
      for (const auto& entry : entries) all_zero &= entry.is_zero();
      if (all_zero) continue;
      MatrixPolynomial L = MatrixPolynomial::from_entries(n, entries);
      if (!identically_singular(L)) return L;
    }
    throw std::logic_error("failed to draw a non-degenerate curve");
  }

  // Small random ideal for the dimension-engine comparisons.
  std::vector<MultiPoly> small_ideal(std::size_t nvars, std::size_t gens,
                                     unsigned max_degree,
                                     bool through_origin = true) {
    std::vector<MultiPoly> out;
    for (std::size_t g = 0; g < gens || out.empty(); ++g) {
      MultiPoly p(nvars);
      const std::size_t terms = 1 + rng_() % 3;
      for (std::size_t t = 0; t < terms; ++t) {
        std::vector<unsigned> exps(nvars, 0u);
        unsigned budget = rng_() % (max_degree + 1);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
          const unsigned e = rng_() % (budget + 1);
          exps[v] = e;
          budget -= e;
        }
        p.add_term(Monomial(std::move(exps)), rational(int_in(-3, 3)));
      }
      if (through_origin)
        p.add_term(Monomial(nvars), -p.coefficient(Monomial(nvars)));
      if (!p.is_zero()) out.push_back(std::move(p));
      if (g > gens + 8) break;
    }
    if (out.empty()) out.push_back(MultiPoly::variable(nvars, 0));
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace opcurve
