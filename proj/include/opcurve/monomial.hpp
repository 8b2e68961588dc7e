#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcurve {

// Exponent vector, one entry per variable of the ambient ring. Dense storage:
// the rings in play are tiny (at most n^2 + 1 variables with n <= 4).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0u) {}
  explicit Monomial(std::vector<unsigned> exponents)
      : exp_(std::move(exponents)) {}

  std::size_t nvars() const { return exp_.size(); }
  unsigned exponent(std::size_t v) const { return exp_[v]; }
  const std::vector<unsigned>& exponents() const { return exp_; }

  unsigned total_degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0u);
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(),
                       [](unsigned e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    check_same_ring(other);
    for (std::size_t v = 0; v < exp_.size(); ++v)
      if (exp_[v] > other.exp_[v]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    check_same_ring(other);
    Monomial r(*this);
    for (std::size_t v = 0; v < exp_.size(); ++v) r.exp_[v] += other.exp_[v];
    return r;
  }

  // this / other, requiring divisibility.
  Monomial operator/(const Monomial& other) const {
    check_same_ring(other);
    Monomial r(*this);
    for (std::size_t v = 0; v < exp_.size(); ++v) {
      if (r.exp_[v] < other.exp_[v])
        throw std::domain_error("monomial division is not exact");
      r.exp_[v] -= other.exp_[v];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    Monomial r(a);
    for (std::size_t v = 0; v < r.exp_.size(); ++v)
      r.exp_[v] = std::max(r.exp_[v], b.exp_[v]);
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same_ring(b);
    Monomial r(a);
    for (std::size_t v = 0; v < r.exp_.size(); ++v)
      r.exp_[v] = std::min(r.exp_[v], b.exp_[v]);
    return r;
  }

  static Monomial variable(std::size_t nvars, std::size_t v,
                           unsigned power = 1) {
    Monomial m(nvars);
    m.exp_[v] = power;
    return m;
  }

  // Container ordering only (used for canonical term maps); the semantic
  // term orders live in MonomialOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exp_ < b.exp_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  void check_same_ring(const Monomial& other) const {
    if (exp_.size() != other.exp_.size())
      throw std::domain_error("monomials from different rings");
  }

  std::vector<unsigned> exp_;
};

// All monomials of total degree exactly d, in canonical (exponent) order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars,
                                                 unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(nvars, 0u);
  const auto walk = [&](auto&& self, std::size_t v, unsigned remaining) -> void {
    if (v + 1 == nvars) {
      e[v] = remaining;
      out.emplace_back(e);
      e[v] = 0;
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[v] = k;
      self(self, v + 1, remaining - k);
    }
    e[v] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.emplace_back(e);
    return out;
  }
  walk(walk, 0, d);
  return out;
}

// All monomials of total degree < bound.
inline std::vector<Monomial> monomials_below_degree(std::size_t nvars,
                                                    unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d < bound; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// Term order: lexicographic, graded reverse lexicographic, or a block
// elimination order (first block lexicographic, remaining block grevlex).
class MonomialOrder {
 public:
  enum class Kind { kLex, kGrevlex, kBlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0); }
  static MonomialOrder block_elimination(std::size_t first_block_size) {
    return MonomialOrder(Kind::kBlockElimination, first_block_size);
  }

  Kind kind() const { return kind_; }
  std::size_t first_block_size() const { return block_; }

  // Three-way comparison: negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kLex:
        return lex_compare(a.exponents(), b.exponents(), 0, a.nvars());
      case Kind::kGrevlex:
        return grevlex_compare(a.exponents(), b.exponents(), 0, a.nvars());
      case Kind::kBlockElimination: {
        const std::size_t k = std::min(block_, a.nvars());
        int c = lex_compare(a.exponents(), b.exponents(), 0, k);
        if (c != 0) return c;
        return grevlex_compare(a.exponents(), b.exponents(), k, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::kLex:
        return "lex";
      case Kind::kGrevlex:
        return "grevlex";
      case Kind::kBlockElimination:
        return "elim(" + std::to_string(block_) + ")";
    }
    return "";
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int lex_compare(const std::vector<unsigned>& a,
                         const std::vector<unsigned>& b, std::size_t from,
                         std::size_t to) {
    for (std::size_t v = from; v < to; ++v) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  static int grevlex_compare(const std::vector<unsigned>& a,
                             const std::vector<unsigned>& b, std::size_t from,
                             std::size_t to) {
    unsigned da = 0, db = 0;
    for (std::size_t v = from; v < to; ++v) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the last variable where they differ decides, with the
    // smaller exponent there being the larger monomial.
    for (std::size_t v = to; v-- > from;) {
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace opcurve
