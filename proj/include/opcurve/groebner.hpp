#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opcurve/extended_nat.hpp"
#include "opcurve/monomial.hpp"
#include "opcurve/multipoly.hpp"

namespace opcurve {

// A reduced Groebner basis: generators are monic, no leading monomial divides
// a monomial of another generator, and generators are sorted descending by
// leading monomial. Reduced bases are canonical for (ideal, order), which the
// property tests rely on.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<MultiPoly> generators, MonomialOrder order,
                std::size_t nvars)
      : generators_(std::move(generators)), order_(order), nvars_(nvars) {
    lm_.reserve(generators_.size());
    for (const auto& g : generators_) lm_.push_back(g.leading_monomial(order_));
  }

  const std::vector<MultiPoly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return generators_.size(); }
  const Monomial& leading_monomial(std::size_t i) const { return lm_[i]; }

  bool is_unit_ideal() const {
    return generators_.size() == 1 && generators_.front().is_constant() &&
           !generators_.front().is_zero();
  }

 private:
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<Monomial> lm_;
};

namespace detail {

// Remainder of f on division by (gens, lms) under `order`. Every monomial of
// the result is outside the leading-term ideal. With `truncate` set, terms of
// total degree >= *truncate are dropped as they appear (reduction modulo the
// power of the maximal ideal generated by the degree-*truncate monomials).
inline MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                        const std::vector<Monomial>& lms,
                        const MonomialOrder& order,
                        std::optional<unsigned> truncate = std::nullopt) {
  MultiPoly h = truncate ? f.truncated_below_degree(*truncate) : f;
  MultiPoly result(f.nvars());
  while (!h.is_zero()) {
    const Monomial lead = h.leading_monomial(order);
    bool divided = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!lms[i].divides(lead)) continue;
      const Rational factor = h.coefficient(lead) /
                              gens[i].coefficient(lms[i]);
      MultiPoly step = gens[i].times_term(lead / lms[i], factor);
      if (truncate) step = step.truncated_below_degree(*truncate);
      h = h - step;
      divided = true;
      break;
    }
    if (!divided) {
      result.add_term(lead, h.coefficient(lead));
      h.add_term(lead, -h.coefficient(lead));
    }
  }
  return result;
}

inline MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  const Monomial& lm = p.leading_monomial(order);
  return (1 / p.coefficient(lm)) * p;
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

struct SPairCompare {
  // Normal selection: smallest lcm degree first (min-heap via greater-than).
  bool operator()(const SPair& a, const SPair& b) const {
    return a.degree > b.degree;
  }
};

// Buchberger's algorithm. Provably safe pruning only: the product criterion,
// and skipping pairs of two monomials (their S-polynomial is identically
// zero). With `truncate` set, S-polynomials and reduction steps are computed
// modulo the ideal of monomials of degree >= *truncate; the caller must seed
// `input` with those monomial generators and pre-truncate the rest.
inline std::vector<MultiPoly> buchberger_core(
    const std::vector<MultiPoly>& input, const MonomialOrder& order,
    std::optional<unsigned> truncate = std::nullopt) {
  std::vector<MultiPoly> basis;
  std::vector<Monomial> lms;
  // In truncated runs every polynomial in play has degree < *truncate, so the
  // degree-*truncate monomial seeds can never divide anything during
  // reduction; keep a separate sublist for the division loop.
  std::vector<MultiPoly> reducers;
  std::vector<Monomial> reducer_lms;
  std::priority_queue<SPair, std::vector<SPair>, SPairCompare> pairs;

  const auto push_generator = [&](const MultiPoly& g) {
    const MultiPoly monic = make_monic(g, order);
    const Monomial lm = monic.leading_monomial(order);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (monic.is_monomial() && basis[k].is_monomial()) continue;
      Monomial l = Monomial::lcm(lm, lms[k]);
      // Product criterion: coprime leading monomials reduce to zero.
      if (l == lm * lms[k]) continue;
      pairs.push(SPair{k, basis.size(), l, l.total_degree()});
    }
    basis.push_back(monic);
    lms.push_back(lm);
    if (!truncate || lm.total_degree() < *truncate) {
      reducers.push_back(basis.back());
      reducer_lms.push_back(lm);
    }
  };

  for (const auto& g : input) {
    if (!g.is_zero()) push_generator(g);
  }

  while (!pairs.empty()) {
    const SPair pair = pairs.top();
    pairs.pop();
    const MultiPoly& f = basis[pair.i];
    const MultiPoly& g = basis[pair.j];
    MultiPoly s = f.times_term(pair.lcm / lms[pair.i], Rational(1)) -
                  g.times_term(pair.lcm / lms[pair.j], Rational(1));
    if (truncate) s = s.truncated_below_degree(*truncate);
    MultiPoly r = reduce(s, reducers, reducer_lms, order, truncate);
    if (!r.is_zero()) push_generator(r);
  }
  return basis;
}

// Minimalize + tail-reduce a basis into the reduced Groebner basis.
inline std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> basis,
                                           const MonomialOrder& order) {
  std::vector<Monomial> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis) lms.push_back(g.leading_monomial(order));

  // Minimal: drop any generator whose leading monomial is divisible by
  // another kept generator's leading monomial.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (lms[j].divides(lms[i]) && (lms[i] != lms[j] || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    minimal.push_back(make_monic(basis[i], order));
    minimal_lms.push_back(lms[i]);
  }

  // Tail-reduce until stable; leading monomials are pairwise non-divisible,
  // so reductions only rewrite tails.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      std::vector<Monomial> others_lms;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        others.push_back(minimal[j]);
        others_lms.push_back(minimal_lms[j]);
      }
      MultiPoly reduced = reduce(minimal[i], others, others_lms, order);
      reduced = make_monic(reduced, order);
      if (reduced != minimal[i]) {
        minimal[i] = reduced;
        changed = true;
      }
    }
  }

  // Canonical presentation: descending leading monomials.
  std::vector<std::size_t> perm(minimal.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order.greater(minimal_lms[a], minimal_lms[b]);
  });
  std::vector<MultiPoly> out;
  out.reserve(minimal.size());
  for (std::size_t i : perm) out.push_back(minimal[i]);
  return out;
}

inline void check_shared_ring(const std::vector<MultiPoly>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i)
    gens[0].check_same_ring(gens[i]);
}

}  // namespace detail

// Remainder of f modulo G; unique for a reduced basis, and zero exactly for
// ideal members.
inline MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) {
  if (f.nvars() != G.nvars())
    throw std::domain_error("normal_form: ambient ring mismatch");
  std::vector<Monomial> lms;
  lms.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i)
    lms.push_back(G.leading_monomial(i));
  return detail::reduce(f, G.generators(), lms, G.order());
}

// Reduced Groebner basis of <gens> under `order`.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens,
                                const MonomialOrder& order) {
  if (gens.empty()) throw std::domain_error("buchberger: no generators");
  detail::check_shared_ring(gens);
  const std::size_t nvars = gens.front().nvars();
  auto basis = detail::buchberger_core(gens, order);
  basis = detail::reduce_basis(std::move(basis), order);
  return GroebnerBasis(std::move(basis), order, nvars);
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g,
                              const MonomialOrder& order) {
  const Monomial& lf = f.leading_monomial(order);
  const Monomial& lg = g.leading_monomial(order);
  const Monomial l = Monomial::lcm(lf, lg);
  return f.times_term(l / lf, 1 / f.coefficient(lf)) -
         g.times_term(l / lg, 1 / g.coefficient(lg));
}

// Generators of <gens> intersected with the subring in the variables after
// the first drop_count, computed from a block-elimination basis and re-indexed
// into the smaller ring.
inline std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens,
                                        std::size_t drop_count) {
  if (gens.empty()) throw std::domain_error("eliminate: no generators");
  detail::check_shared_ring(gens);
  GroebnerBasis G =
      buchberger(gens, MonomialOrder::block_elimination(drop_count));
  std::vector<MultiPoly> out;
  for (const auto& g : G.generators()) {
    bool in_subring = true;
    for (std::size_t v = 0; v < drop_count && in_subring; ++v)
      if (g.involves_variable(v)) in_subring = false;
    if (in_subring) out.push_back(g.with_leading_vars_dropped(drop_count));
  }
  return out;
}

// Number of standard monomials (monomials outside the leading-term ideal);
// infinity when the ideal is not zero-dimensional.
inline ExtendedNat quotient_dimension(const GroebnerBasis& G) {
  const std::size_t nvars = G.nvars();
  std::vector<Monomial> lms;
  lms.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G.generators()[i].is_zero()) continue;
    lms.push_back(G.leading_monomial(i));
  }
  for (const auto& lm : lms)
    if (lm.is_one()) return 0;  // unit ideal: zero ring

  // Zero-dimensional iff some pure power of every variable leads.
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& lm : lms) {
      if (lm.exponent(v) == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < nvars && pure; ++w)
        if (w != v && lm.exponent(w) != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return ExtendedNat::infinity();
  }

  // Standard monomials form an order ideal: depth-first walk with pruning.
  std::int64_t count = 0;
  Monomial current(nvars);
  const auto divisible = [&lms](const Monomial& m) {
    for (const auto& lm : lms)
      if (lm.divides(m)) return true;
    return false;
  };
  const auto walk = [&](auto&& self, std::size_t from_var) -> void {
    ++count;
    for (std::size_t v = from_var; v < nvars; ++v) {
      std::vector<unsigned> e = current.exponents();
      ++e[v];
      Monomial next{std::move(e)};
      if (!divisible(next)) {
        Monomial saved = current;
        current = std::move(next);
        self(self, v);
        current = std::move(saved);
      }
    }
  };
  if (lms.empty()) return ExtendedNat::infinity();
  if (nvars == 0) return 1;
  walk(walk, 0);
  return count;
}

}  // namespace opcurve
