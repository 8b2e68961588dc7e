#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opcurve/extended_nat.hpp"
#include "opcurve/rational.hpp"

namespace opcurve {

// Univariate polynomial over the rationals, stored densely by power with no
// trailing zero coefficients. The zero polynomial has an empty coefficient
// vector and no degree.
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(Rational constant) {
    if (constant != 0) coeff_.push_back(std::move(constant));
  }

  static UniPoly from_coefficients(std::vector<Rational> coeffs) {
    UniPoly p;
    p.coeff_ = std::move(coeffs);
    p.trim();
    return p;
  }

  // c * x^k
  static UniPoly monomial(int k, Rational c) {
    UniPoly p;
    if (c != 0) {
      p.coeff_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
      p.coeff_.back() = std::move(c);
    }
    return p;
  }

  static UniPoly variable() { return monomial(1, Rational(1)); }

  bool is_zero() const { return coeff_.empty(); }

  // The zero polynomial has no degree (the "-infinity" case).
  std::optional<int> degree() const {
    if (coeff_.empty()) return std::nullopt;
    return static_cast<int>(coeff_.size()) - 1;
  }

  const Rational& leading_coefficient() const {
    if (coeff_.empty())
      throw std::domain_error("leading coefficient of zero polynomial");
    return coeff_.back();
  }

  // Coefficient of x^k; zero beyond the degree.
  const Rational& coefficient(int k) const {
    static const Rational kZero(0);
    if (k < 0 || static_cast<std::size_t>(k) >= coeff_.size()) return kZero;
    return coeff_[static_cast<std::size_t>(k)];
  }

  const std::vector<Rational>& coefficients() const { return coeff_; }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (coeff_.size() <= 1) return UniPoly();
    std::vector<Rational> d(coeff_.size() - 1);
    for (std::size_t k = 1; k < coeff_.size(); ++k)
      d[k - 1] = coeff_[k] * Rational(static_cast<long>(k));
    return from_coefficients(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()),
                            Rational(0));
    for (std::size_t k = 0; k < a.coeff_.size(); ++k) c[k] += a.coeff_[k];
    for (std::size_t k = 0; k < b.coeff_.size(); ++k) c[k] += b.coeff_[k];
    return from_coefficients(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()),
                            Rational(0));
    for (std::size_t k = 0; k < a.coeff_.size(); ++k) c[k] += a.coeff_[k];
    for (std::size_t k = 0; k < b.coeff_.size(); ++k) c[k] -= b.coeff_[k];
    return from_coefficients(std::move(c));
  }

  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> c(a.coeff_);
    for (auto& x : c) x = -x;
    return from_coefficients(std::move(c));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
      for (std::size_t j = 0; j < b.coeff_.size(); ++j)
        c[i + j] += a.coeff_[i] * b.coeff_[j];
    return from_coefficients(std::move(c));
  }

  friend UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return UniPoly();
    std::vector<Rational> c(a.coeff_);
    for (auto& x : c) x *= s;
    return from_coefficients(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }

  std::vector<Rational> coeff_;
};

struct UniDivRem {
  UniPoly quotient;
  UniPoly remainder;
};

inline UniDivRem divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients());
  const int db = *b.degree();
  const Rational& lb = b.leading_coefficient();
  std::vector<Rational> quo;
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - static_cast<std::size_t>(db), Rational(0));
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= db) {
    if (rem[static_cast<std::size_t>(dr)] == 0) {
      --dr;
      continue;
    }
    Rational q = rem[static_cast<std::size_t>(dr)] / lb;
    quo[static_cast<std::size_t>(dr - db)] = q;
    for (int k = 0; k <= db; ++k)
      rem[static_cast<std::size_t>(dr - db + k)] -= q * b.coefficient(k);
    --dr;
  }
  return {UniPoly::from_coefficients(std::move(quo)),
          UniPoly::from_coefficients(std::move(rem))};
}

// Division known to be exact; throws if a remainder appears.
inline UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  UniDivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero())
    throw std::logic_error("exact_divide: division left a remainder");
  return qr.quotient;
}

inline UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coefficient();
  return inv * p;
}

// Monic greatest common divisor by the Euclidean algorithm.
inline UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

// Largest e with (x - x0)^e dividing p; infinity for the zero polynomial.
inline ExtendedNat ord_at(const UniPoly& p, const Rational& x0) {
  if (p.is_zero()) return ExtendedNat::infinity();
  UniPoly q = p;
  std::int64_t order = 0;
  while (q.evaluate(x0) == 0) {
    // synthetic division by (x - x0)
    const auto& c = q.coefficients();
    std::vector<Rational> next(c.size() - 1);
    Rational carry(0);
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = c[k] + carry * x0;
      next[k - 1] = carry;
    }
    q = UniPoly::from_coefficients(std::move(next));
    ++order;
  }
  return order;
}

struct SquareFreeFactorization {
  Rational unit;  // p = unit * prod factors[i].first ^ factors[i].second
  std::vector<std::pair<UniPoly, int>> factors;  // monic, pairwise coprime
};

// Yun's algorithm (characteristic zero).
inline SquareFreeFactorization squarefree_factor(const UniPoly& p) {
  if (p.is_zero())
    throw std::domain_error("square-free factorization of zero polynomial");
  SquareFreeFactorization out;
  out.unit = p.leading_coefficient();
  UniPoly q = make_monic(p);
  if (*q.degree() == 0) return out;
  UniPoly dq = q.derivative();
  UniPoly g = poly_gcd(q, dq);
  UniPoly b = exact_divide(q, g);
  UniPoly c = exact_divide(dq, g);
  UniPoly d = c - b.derivative();
  int mult = 1;
  while (*b.degree() > 0) {
    UniPoly factor = poly_gcd(b, d);
    if (*factor.degree() > 0) out.factors.emplace_back(factor, mult);
    b = exact_divide(b, factor);
    c = exact_divide(d, factor);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

namespace detail {

// All positive divisors of |n|, n != 0, by trial division. Instances here are
// desk scale; a residual cofactor that cannot be certified prime is refused
// rather than risking an incomplete divisor list.
inline std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) throw std::domain_error("divisors of zero");
  std::vector<std::pair<Integer, int>> factorization;
  Integer d(2);
  while (d * d <= n && d < 2000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factorization.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (d * d > n || mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      factorization.emplace_back(n, 1);
    } else {
      throw std::domain_error(
          "rational root search: coefficient too large to factor");
    }
  }
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [prime, exp] : factorization) {
    const std::size_t base = divisors.size();
    Integer power(1);
    for (int e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace detail

// Every rational root of p with its multiplicity, by the rational root
// theorem applied to the primitive integer form. Sorted ascending.
inline std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
  if (p.is_zero())
    throw std::domain_error("rational roots of zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  if (*p.degree() == 0) return roots;

  // Root at zero first, then work with the deflated polynomial.
  std::vector<Rational> c = p.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(Rational(0), static_cast<int>(low));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  UniPoly q = UniPoly::from_coefficients(c);
  if (*q.degree() == 0) return roots;

  // Clear denominators to a primitive integer polynomial.
  Integer den_lcm(1);
  for (const auto& x : q.coefficients())
    den_lcm = lcm(den_lcm, Integer(x.get_den()));
  std::vector<Integer> ic;
  ic.reserve(q.coefficients().size());
  for (const auto& x : q.coefficients())
    ic.push_back(Integer(x.get_num()) * (den_lcm / Integer(x.get_den())));
  Integer content(0);
  for (const auto& z : ic) content = gcd(content, z);
  for (auto& z : ic) z /= content;

  const auto nums = detail::positive_divisors(ic.front());
  const auto dens = detail::positive_divisors(ic.back());
  for (const auto& pn : nums) {
    for (const auto& qd : dens) {
      if (gcd(pn, qd) != 1) continue;
      for (int sign : {+1, -1}) {
        Rational cand(sign > 0 ? pn : -pn, qd);
        cand.canonicalize();
        if (q.evaluate(cand) == 0)
          roots.emplace_back(cand, static_cast<int>(ord_at(q, cand).value()));
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

// Rendering used by reports: descending powers, e.g. "-lambda^2 + 1/2".
inline std::string to_string(const UniPoly& p,
                             const std::string& var = "lambda") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = *p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficient(k);
    if (c == 0) continue;
    const bool first = out.empty();
    Rational mag = abs(c);
    if (first)
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    const bool unit_coeff = (mag == 1) && k > 0;
    if (!unit_coeff) out += to_string(mag);
    if (k > 0) {
      if (!unit_coeff) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace opcurve
