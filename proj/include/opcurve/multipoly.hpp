#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opcurve/monomial.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/unipoly.hpp"

namespace opcurve {

// Multivariate polynomial over the rationals: a term map from monomials to
// nonzero coefficients. Two polynomials are equal iff their term maps are.
// The map's container order is canonical and independent of any term order;
// leading terms are found by scanning with an explicit MonomialOrder.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, Rational c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), std::move(c));
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t v) {
    MultiPoly p(nvars);
    p.terms_.emplace(Monomial::variable(nvars, v), Rational(1));
    return p;
  }

  static MultiPoly term(Monomial m, Rational c) {
    MultiPoly p(m.nvars());
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  // Embed a univariate polynomial as a polynomial in variable `v`.
  static MultiPoly from_unipoly(const UniPoly& u, std::size_t nvars,
                                std::size_t v) {
    MultiPoly p(nvars);
    for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
      const Rational& c = u.coefficients()[k];
      if (c != 0)
        p.terms_.emplace(Monomial::variable(nvars, v, static_cast<unsigned>(k)),
                         c);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  // Smallest total degree of a term (0 for the zero polynomial).
  unsigned min_degree() const {
    bool first = true;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
      const unsigned t = m.total_degree();
      if (first || t < d) d = t;
      first = false;
    }
    return d;
  }

  const Monomial& leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty())
      throw std::domain_error("leading monomial of zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
      if (best == nullptr || order.less(*best, m)) best = &m;
    return *best;
  }

  const Rational& coefficient(const Monomial& m) const {
    static const Rational kZero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    MultiPoly r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    MultiPoly r(a);
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_ring(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  // s * m * this, the workhorse of polynomial reduction.
  MultiPoly times_term(const Monomial& m, const Rational& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, s * c);
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  // Drop every term of total degree >= bound.
  MultiPoly truncated_below_degree(unsigned bound) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.total_degree() < bound) r.terms_.emplace(m, c);
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_)
      throw std::domain_error("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t v = 0; v < nvars_; ++v)
        for (unsigned e = 0; e < m.exponent(v); ++e) t *= point[v];
      acc += t;
    }
    return acc;
  }

  // Substitute x_v -> replacement[v](s) for every variable, producing a
  // univariate polynomial in s.
  UniPoly substitute_univariate(const std::vector<UniPoly>& replacement) const {
    if (replacement.size() != nvars_)
      throw std::domain_error("substitution list has wrong dimension");
    UniPoly acc;
    for (const auto& [m, c] : terms_) {
      UniPoly t(c);
      for (std::size_t v = 0; v < nvars_; ++v)
        for (unsigned e = 0; e < m.exponent(v); ++e) t = t * replacement[v];
      acc = acc + t;
    }
    return acc;
  }

  // Substitute x_v -> x_v + offset[v] (translation of the origin).
  MultiPoly translated(const std::vector<Rational>& offset) const {
    if (offset.size() != nvars_)
      throw std::domain_error("translation vector has wrong dimension");
    // (x_v + o_v)^e tables, built once per variable up to the needed power.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
      unsigned max_e = 0;
      for (const auto& [m, c] : terms_) max_e = std::max(max_e, m.exponent(v));
      powers[v].reserve(max_e + 1);
      powers[v].push_back(MultiPoly::constant(nvars_, 1));
      const MultiPoly base =
          MultiPoly::variable(nvars_, v) + MultiPoly::constant(nvars_, offset[v]);
      for (unsigned e = 1; e <= max_e; ++e)
        powers[v].push_back(powers[v].back() * base);
    }
    MultiPoly acc(nvars_);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = MultiPoly::constant(nvars_, c);
      for (std::size_t v = 0; v < nvars_; ++v)
        if (m.exponent(v) > 0) t = t * powers[v][m.exponent(v)];
      acc = acc + t;
    }
    return acc;
  }

  // Reinterpret in a ring with `count` extra leading variables.
  MultiPoly with_vars_prepended(std::size_t count) const {
    MultiPoly r(nvars_ + count);
    for (const auto& [m, c] : terms_) {
      std::vector<unsigned> e(nvars_ + count, 0u);
      for (std::size_t v = 0; v < nvars_; ++v) e[count + v] = m.exponent(v);
      r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
  }

  // Inverse of with_vars_prepended; every dropped exponent must be zero.
  MultiPoly with_leading_vars_dropped(std::size_t count) const {
    if (count > nvars_) throw std::domain_error("dropping too many variables");
    MultiPoly r(nvars_ - count);
    for (const auto& [m, c] : terms_) {
      for (std::size_t v = 0; v < count; ++v)
        if (m.exponent(v) != 0)
          throw std::domain_error("dropped variable occurs in polynomial");
      std::vector<unsigned> e(m.exponents().begin() +
                                  static_cast<std::ptrdiff_t>(count),
                              m.exponents().end());
      r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
  }

  bool involves_variable(std::size_t v) const {
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) > 0) return true;
    return false;
  }

  void check_same_ring(const MultiPoly& other) const {
    if (nvars_ != other.nvars_)
      throw std::domain_error("polynomials from different rings");
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Rendering with the given variable names, lex-descending terms.
inline std::string to_string(const MultiPoly& p,
                             const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  if (names.size() != p.nvars())
    throw std::invalid_argument("variable name list has wrong length");
  std::vector<const Monomial*> mons;
  mons.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) mons.push_back(&m);
  const MonomialOrder order = MonomialOrder::lex();
  std::sort(mons.begin(), mons.end(),
            [&order](const Monomial* a, const Monomial* b) {
              return order.greater(*a, *b);
            });
  std::string out;
  for (const Monomial* m : mons) {
    const Rational& c = p.coefficient(*m);
    const Rational mag = abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    std::string vars;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (m->exponent(v) == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (m->exponent(v) > 1) vars += "^" + std::to_string(m->exponent(v));
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += vars;
    }
  }
  return out;
}

// Default variable names x1..xk.
inline std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t v = 0; v < nvars; ++v)
    names.push_back("x" + std::to_string(v + 1));
  return names;
}

}  // namespace opcurve
