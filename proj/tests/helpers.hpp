#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "opcurve/groebner.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"

namespace opcurve::testing {

inline RationalMatrix rmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return RationalMatrix::from_rows(r);
}

// L(s) = [[s^2 - 1, s], [s, 0]]: admissible quadratic curve whose spectrum
// is {0} with multiplicity 2 and which meets the singular surface at
// infinity.
inline MatrixPolynomial quadratic_example() {
  return MatrixPolynomial(
      2, {rmat({{-1, 0}, {0, 0}}), rmat({{0, 1}, {1, 0}}),
          rmat({{1, 0}, {0, 0}})});
}

// L(s) = diag(s^2, 1): the non-admissible curve where the affine
// intersection index undercounts the multiplicity.
inline MatrixPolynomial non_admissible_example() {
  return MatrixPolynomial(
      2, {rmat({{0, 0}, {0, 1}}), rmat({{0, 0}, {0, 0}}),
          rmat({{1, 0}, {0, 0}})});
}

// mpoly(3, {{{1,0,0}, 2}, {{0,2,0}, -1}}) = 2*x1 - x2^2
inline MultiPoly mpoly(
    std::size_t nvars,
    std::vector<std::pair<std::vector<unsigned>, long>> terms) {
  MultiPoly p(nvars);
  for (auto& [exps, c] : terms)
    p.add_term(Monomial(std::move(exps)), Rational(c));
  return p;
}

// Equality of ideals via equality of reduced Groebner bases.
inline bool equal_ideals(const std::vector<MultiPoly>& a,
                         const std::vector<MultiPoly>& b,
                         const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (a.empty() || b.empty()) {
    const auto nonzero = [](const std::vector<MultiPoly>& gens) {
      return std::any_of(gens.begin(), gens.end(),
                         [](const MultiPoly& g) { return !g.is_zero(); });
    };
    return nonzero(a) == nonzero(b);
  }
  return buchberger(a, order).generators() ==
         buchberger(b, order).generators();
}

inline MultiPoly random_mpoly(std::mt19937_64& rng, std::size_t nvars,
                              unsigned max_degree, std::size_t max_terms) {
  MultiPoly p(nvars);
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(nvars, 0u);
    unsigned budget = rng() % (max_degree + 1);
    for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
      const unsigned e = rng() % (budget + 1);
      exps[v] = e;
      budget -= e;
    }
    const long c = static_cast<long>(rng() % 9) - 4;
    p.add_term(Monomial(std::move(exps)), Rational(c));
  }
  return p;
}

}  // namespace opcurve::testing
