#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace opcurve {

// A count that is either a natural number or infinity. Infinity shows up as
// the order of vanishing of the zero polynomial, the multiplicity on an
// identically singular curve, and the dimension of a non-zero-dimensional
// quotient ring.
class ExtendedNat {
 public:
  constexpr ExtendedNat(std::int64_t value) : infinite_(false), value_(value) {}

  static constexpr ExtendedNat infinity() { return ExtendedNat(true, 0); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  std::int64_t value() const {
    if (infinite_) throw std::domain_error("infinite count has no finite value");
    return value_;
  }

  friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(const ExtendedNat& a, const ExtendedNat& b) {
    return !(a == b);
  }

  std::string str() const {
    return infinite_ ? "infinity" : std::to_string(value_);
  }

 private:
  constexpr ExtendedNat(bool infinite, std::int64_t value)
      : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::int64_t value_;
};

}  // namespace opcurve
