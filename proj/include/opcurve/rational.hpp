#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace opcurve {

// Exact rational scalar. mpq_class keeps every value canonical (denominator
// positive, gcd(|numerator|, denominator) = 1) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Serialized form used by input files and reports: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Strict parse of the serialized form: optional leading '-', decimal digits,
// optional "/q" with a positive all-digit denominator.
inline Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() -> Rational {
    throw std::invalid_argument("malformed rational literal: \"" + text + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++num_digits;
  }
  if (num_digits == 0) return fail();
  if (i != text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) return fail();
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) return fail();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) return fail();
  r.canonicalize();
  return r;
}

}  // namespace opcurve
