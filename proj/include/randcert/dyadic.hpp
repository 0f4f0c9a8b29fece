#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace randcert {

// Exact non-negative dyadic rational numerator / 2^denom_exp, kept in lowest
// terms (odd numerator, or 0 / 2^0). Addition and comparison are exact, so
// accumulation order can never change a result.
class Dyadic {
 public:
  constexpr Dyadic() = default;  // zero

  // Normalizes; throws std::overflow_error when the reduced numerator does
  // not fit 64 bits.
  static Dyadic from_parts(uint64_t numerator, unsigned denom_exp);

  // 2^-exp.
  static Dyadic power_of_two_reciprocal(unsigned exp);

  uint64_t numerator() const { return num_; }
  unsigned denom_exp() const { return exp_; }

  Dyadic& operator+=(const Dyadic& other);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

  double to_double() const;

  // "0.111"-style exact binary expansion (integer part, point, denom_exp
  // fractional digits; at least one digit either side).
  std::string binary_string() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  std::strong_ordering operator<=>(const Dyadic& other) const;

 private:
  uint64_t num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace randcert
