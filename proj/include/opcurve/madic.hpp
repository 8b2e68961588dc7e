#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opcurve/errors.hpp"
#include "opcurve/groebner.hpp"
#include "opcurve/monomial.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/rational.hpp"

namespace opcurve {

// dim_k k[x]/(J + m^N) at the origin, where J = <gens> and m is the maximal
// ideal of the origin. Groebner route: Buchberger on the truncated generators
// together with the degree-N monomials, then a standard-monomial count.
inline std::int64_t truncated_quotient_dimension(
    const std::vector<MultiPoly>& gens, unsigned N) {
  if (N < 1) throw std::domain_error("truncation degree must be >= 1");
  if (gens.empty()) throw std::domain_error("no generators");
  detail::check_shared_ring(gens);
  const std::size_t nvars = gens.front().nvars();
  const MonomialOrder order = MonomialOrder::grevlex();

  std::vector<MultiPoly> seed;
  for (const auto& g : gens) {
    MultiPoly t = g.truncated_below_degree(N);
    if (!t.is_zero()) seed.push_back(std::move(t));
  }
  for (const auto& m : monomials_of_degree(nvars, N))
    seed.push_back(MultiPoly::term(m, Rational(1)));

  const auto basis = detail::buchberger_core(seed, order, N);

  // Only the leading monomials matter for the count, and only those of
  // degree < N can divide a candidate (every monomial of degree >= N is
  // already outside the staircase).
  std::vector<Monomial> lms;
  for (const auto& g : basis) {
    const Monomial& lm = g.leading_monomial(order);
    if (lm.is_one()) return 0;
    if (lm.total_degree() < N) lms.push_back(lm);
  }

  std::int64_t count = 0;
  for (const auto& m : monomials_below_degree(nvars, N)) {
    bool standard = true;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
  }
  return count;
}

// dim_k k[x]/(J + m_p^N) where m_p is the maximal ideal of `point`:
// translate the point to the origin and measure there.
inline std::int64_t madic_dimension(const std::vector<MultiPoly>& gens,
                                    const std::vector<Rational>& point,
                                    unsigned N) {
  std::vector<Rational> offset = point;
  std::vector<MultiPoly> translated;
  translated.reserve(gens.size());
  for (const auto& g : gens) translated.push_back(g.translated(offset));
  return truncated_quotient_dimension(translated, N);
}

struct LocalMultiplicityOptions {
  // Refuse after this many truncation levels without stabilization.
  unsigned max_truncation = 64;
};

struct LocalMultiplicityResult {
  std::int64_t value = 0;
  // d_N = d_{N+1} = value with N = stabilized_at.
  unsigned stabilized_at = 0;
};

// Length of the local ring of V(<gens>) at `point`: the m-adic dimensions
// d_N = dim k[x]/(J + m^N) are computed for N = 1, 2, ... until two agree.
// One step suffices: once d_N = d_{N+1}, Nakayama's lemma forces the whole
// tail to be constant. A sequence that keeps growing means the point is not
// an isolated solution.
inline LocalMultiplicityResult local_multiplicity_profile(
    const std::vector<MultiPoly>& gens, const std::vector<Rational>& point,
    const LocalMultiplicityOptions& options = {}) {
  std::vector<MultiPoly> translated;
  translated.reserve(gens.size());
  for (const auto& g : gens) translated.push_back(g.translated(point));

  std::int64_t previous = -1;
  for (unsigned N = 1; N <= options.max_truncation; ++N) {
    const std::int64_t d = truncated_quotient_dimension(translated, N);
    if (d == previous) return {d, N - 1};
    previous = d;
  }
  throw StabilizationError(
      "m-adic dimensions did not stabilize within N <= " +
      std::to_string(options.max_truncation) +
      "; the point is not an isolated solution (or raise the bound)");
}

inline std::int64_t local_multiplicity(
    const std::vector<MultiPoly>& gens, const std::vector<Rational>& point,
    const LocalMultiplicityOptions& options = {}) {
  return local_multiplicity_profile(gens, point, options).value;
}

// Independent linear-algebra oracle for dim k[x]/(J + m^N): row-reduce the
// Macaulay matrix of all products f*m (f a generator, m a monomial of degree
// < N) truncated below degree N. No Groebner machinery is involved.
inline std::int64_t quotient_dimension_truncated(
    const std::vector<MultiPoly>& gens, unsigned N) {
  if (N < 1) throw std::domain_error("truncation degree must be >= 1");
  if (gens.empty()) throw std::domain_error("no generators");
  detail::check_shared_ring(gens);
  const std::size_t nvars = gens.front().nvars();

  const std::vector<Monomial> columns = monomials_below_degree(nvars, N);
  std::map<Monomial, std::size_t> column_index;
  for (std::size_t j = 0; j < columns.size(); ++j)
    column_index.emplace(columns[j], j);

  // Echelon rows keyed by pivot column, each normalized to pivot 1.
  std::map<std::size_t, std::vector<Rational>> echelon;
  const auto insert_row = [&](std::vector<Rational> row) {
    for (auto& [pivot, prow] : echelon) {
      if (row[pivot] == 0) continue;
      const Rational f = row[pivot];
      for (std::size_t j = pivot; j < row.size(); ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      const Rational inv = 1 / row[j];
      for (std::size_t k = j; k < row.size(); ++k) row[k] *= inv;
      echelon.emplace(j, std::move(row));
      return;
    }
  };

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    for (const auto& m : columns) {
      if (m.total_degree() + f.min_degree() >= N) continue;
      std::vector<Rational> row(columns.size(), Rational(0));
      bool nonzero = false;
      for (const auto& [fm, c] : f.terms()) {
        const Monomial product = fm * m;
        if (product.total_degree() >= N) continue;
        row[column_index.at(product)] += c;
        nonzero = true;
      }
      if (nonzero) insert_row(std::move(row));
    }
  }
  return static_cast<std::int64_t>(columns.size()) -
         static_cast<std::int64_t>(echelon.size());
}

}  // namespace opcurve
