#include "randcert/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace randcert {

namespace {

using u128 = unsigned __int128;

Dyadic normalized(u128 num, unsigned exp) {
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num >> 64) throw std::overflow_error("dyadic numerator exceeds 64 bits");
  return Dyadic::from_parts(uint64_t(num), exp);
}

}  // namespace

Dyadic Dyadic::from_parts(uint64_t numerator, unsigned denom_exp) {
  if (denom_exp > 63)
    throw std::overflow_error("dyadic denominator exponent above 63");
  Dyadic d;
  while (denom_exp > 0 && (numerator & 1) == 0) {
    numerator >>= 1;
    --denom_exp;
  }
  if (numerator == 0) denom_exp = 0;
  d.num_ = numerator;
  d.exp_ = denom_exp;
  return d;
}

Dyadic Dyadic::power_of_two_reciprocal(unsigned exp) {
  if (exp > 63)
    throw std::overflow_error("dyadic denominator exponent above 63");
  Dyadic d;
  d.num_ = 1;
  d.exp_ = exp;
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  unsigned e = exp_ > other.exp_ ? exp_ : other.exp_;
  u128 sum = (u128(num_) << (e - exp_)) + (u128(other.num_) << (e - other.exp_));
  *this = normalized(sum, e);
  return *this;
}

double Dyadic::to_double() const { return std::ldexp(double(num_), -int(exp_)); }

std::string Dyadic::binary_string() const {
  uint64_t integer = exp_ >= 64 ? 0 : num_ >> exp_;
  std::string out = std::to_string(integer);
  out.push_back('.');
  if (exp_ == 0) {
    out.push_back('0');
    return out;
  }
  for (unsigned k = 1; k <= exp_; ++k)
    out.push_back((num_ >> (exp_ - k)) & 1 ? '1' : '0');
  return out;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
  unsigned e = exp_ > other.exp_ ? exp_ : other.exp_;
  u128 a = u128(num_) << (e - exp_);
  u128 b = u128(other.num_) << (e - other.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace randcert
