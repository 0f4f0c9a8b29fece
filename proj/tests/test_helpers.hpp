#pragma once

#include <random>
#include <string>

#include "randcert/bitstring.hpp"
#include "randcert/formats.hpp"

// ascii01 shorthands used across the suites.
inline randcert::BitString bits_of(const std::string& s) {
  return randcert::parse_bits(s, randcert::BitFormat::ascii01);
}

inline std::string ascii_of(const randcert::BitString& x) {
  return randcert::render_bits(x, randcert::BitFormat::ascii01);
}

inline randcert::BitString random_bits(std::mt19937_64& rng, size_t len) {
  randcert::BitStringBuilder b;
  b.reserve_bits(len);
  for (size_t i = 0; i < len; ++i) b.push(rng() & 1);
  return b.build();
}
