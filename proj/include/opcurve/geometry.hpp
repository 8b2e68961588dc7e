#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcurve/errors.hpp"
#include "opcurve/groebner.hpp"
#include "opcurve/madic.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// The determinant of the generic n x n matrix whose entries are the
// variables x1..x_{n^2} in row-major layout: the defining equation of the
// hypersurface of singular matrices. Homogeneous of degree n with n! terms.
inline MultiPoly det_generator(std::size_t n) {
  if (n == 0) throw std::domain_error("matrix size must be positive");
  const std::size_t nvars = n * n;
  MultiPoly det(nvars);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // Expand over permutations; n <= 4 in practice, so n! stays tiny.
  std::vector<bool> used(n, false);
  std::vector<std::size_t> image(n, 0);
  const auto walk = [&](auto&& self, std::size_t row, bool odd) -> void {
    if (row == n) {
      std::vector<unsigned> exps(nvars, 0u);
      for (std::size_t i = 0; i < n; ++i) exps[i * n + image[i]] += 1;
      det.add_term(Monomial(std::move(exps)), Rational(odd ? -1 : 1));
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col]) continue;
      used[col] = true;
      image[row] = col;
      // Parity change: number of smaller unused columns skipped.
      std::size_t inversions = 0;
      for (std::size_t c = 0; c < col; ++c)
        if (!used[c]) ++inversions;
      self(self, row + 1, odd ^ (inversions % 2 == 1));
      used[col] = false;
    }
  };
  walk(walk, 0, false);
  return det;
}

// Generators x_i - L_i(lambda) of the graph of L inside the (lambda, x)-ring.
// Variable 0 is lambda; variable 1 + k is the row-major entry k of the
// matrix space.
inline std::vector<MultiPoly> graph_generators(const MatrixPolynomial& L) {
  const std::size_t nsq = L.size() * L.size();
  const std::size_t nvars = 1 + nsq;
  const auto entries = L.entries_row_major();
  std::vector<MultiPoly> gens;
  gens.reserve(nsq);
  for (std::size_t k = 0; k < nsq; ++k)
    gens.push_back(MultiPoly::variable(nvars, 1 + k) -
                   MultiPoly::from_unipoly(entries[k], nvars, 0));
  return gens;
}

// Vanishing ideal of (the closure of) the image of L in matrix space: the
// kernel of x_i -> L_i(lambda), computed by eliminating lambda from the
// graph ideal.
struct CurveIdeal {
  std::vector<MultiPoly> generators;  // in the n^2 entry variables
  bool admissible = false;
};

// Subalgebra membership test: L is admissible exactly when lambda lies in
// k[L_1(lambda), .., L_{n^2}(lambda)], i.e. when the normal form of lambda
// under a lambda-first elimination basis of the graph ideal is lambda-free.
inline bool is_admissible(const MatrixPolynomial& L) {
  const auto gens = graph_generators(L);
  const GroebnerBasis G = buchberger(gens, MonomialOrder::block_elimination(1));
  const MultiPoly lambda = MultiPoly::variable(gens.front().nvars(), 0);
  return !normal_form(lambda, G).involves_variable(0);
}

inline CurveIdeal curve_ideal(const MatrixPolynomial& L) {
  CurveIdeal ideal;
  ideal.generators = eliminate(graph_generators(L), 1);
  ideal.admissible = is_admissible(L);
  return ideal;
}

// Monic gcd of the entry differences L_i(lambda) - L_i(lambda0). For an
// admissible curve this is exactly (lambda - lambda0); the gcd exposes the
// failure on non-admissible curves.
inline UniPoly entry_difference_gcd(const MatrixPolynomial& L,
                                    const Rational& lambda0) {
  const auto entries = L.entries_row_major();
  const RationalMatrix value = L.evaluate(lambda0);
  UniPoly acc;
  bool any = false;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) {
      UniPoly diff = entries[i * L.size() + j] - UniPoly(value.at(i, j));
      if (diff.is_zero()) continue;
      acc = any ? poly_gcd(acc, diff) : make_monic(diff);
      any = true;
    }
  if (!any)
    throw std::domain_error(
        "entry difference gcd: constant curve, all differences vanish");
  return acc;
}

// The point L(lambda0) as row-major coordinates in matrix space.
inline std::vector<Rational> curve_point(const MatrixPolynomial& L,
                                         const Rational& lambda0) {
  const RationalMatrix value = L.evaluate(lambda0);
  std::vector<Rational> point;
  point.reserve(L.size() * L.size());
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = 0; j < L.size(); ++j) point.push_back(value.at(i, j));
  return point;
}

// A generator system together with the point where its local structure is
// measured.
struct LocalSystem {
  std::vector<MultiPoly> generators;
  std::vector<Rational> point;
};

// Hypersurface equation plus curve ideal, at the point L(lambda0).
inline LocalSystem affine_intersection_system(const MatrixPolynomial& L,
                                              const Rational& lambda0) {
  LocalSystem system;
  system.generators = curve_ideal(L).generators;
  system.generators.push_back(det_generator(L.size()));
  system.point = curve_point(L, lambda0);
  return system;
}

// Local intersection index of the singular-matrix hypersurface with the
// image curve of L at the point L(lambda0). Computed entirely on the
// geometric side: elimination ideal plus the generic determinant, measured
// by m-adic stabilization at the point. The order of vanishing of det(L) is
// never consulted, so agreement with the algebraic multiplicity is a real
// cross-check for admissible curves.
inline std::int64_t intersection_index_affine(
    const MatrixPolynomial& L, const Rational& lambda0,
    const LocalMultiplicityOptions& options = {}) {
  if (identically_singular(L))
    throw IdenticallySingularError(
        "affine intersection index: curve lies inside the hypersurface");
  if (determinant(L.evaluate(lambda0)) != 0) return 0;
  const LocalSystem system = affine_intersection_system(L, lambda0);
  return local_multiplicity(system.generators, system.point, options);
}

// Generators x_i - L_i(lambda) regarded as cutting out the resolution of the
// curve: the graph of L in (lambda, x)-space.
struct ResolutionIdeal {
  std::vector<MultiPoly> generators;  // n^2 generators, variable 0 is lambda
};

inline ResolutionIdeal resolution_ideal(const MatrixPolynomial& L) {
  return {graph_generators(L)};
}

// Lifted hypersurface equation plus graph ideal, at (lambda0, L(lambda0)).
inline LocalSystem resolution_intersection_system(const MatrixPolynomial& L,
                                                  const Rational& lambda0) {
  LocalSystem system;
  system.generators = graph_generators(L);
  system.generators.push_back(det_generator(L.size()).with_vars_prepended(1));
  system.point.reserve(1 + L.size() * L.size());
  system.point.push_back(lambda0);
  for (auto& c : curve_point(L, lambda0))
    system.point.push_back(std::move(c));
  return system;
}

// Local intersection index of the lifted hypersurface with the resolution at
// the point (lambda0, L(lambda0)). Valid for every curve, admissible or not.
inline std::int64_t intersection_index_resolution(
    const MatrixPolynomial& L, const Rational& lambda0,
    const LocalMultiplicityOptions& options = {}) {
  if (identically_singular(L))
    throw IdenticallySingularError(
        "resolution intersection index: curve lies inside the hypersurface");
  if (determinant(L.evaluate(lambda0)) != 0) return 0;
  const LocalSystem system = resolution_intersection_system(L, lambda0);
  return local_multiplicity(system.generators, system.point, options);
}

}  // namespace opcurve
