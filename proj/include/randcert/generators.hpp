#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "randcert/bitstring.hpp"

namespace randcert {

enum class SourceKind { champernowne, bernoulli, prng };

// Reference-source description. phase_theta is carried as metadata only:
// sources that differ solely in phase produce identical bits.
struct SourceSpec {
  SourceKind kind = SourceKind::prng;
  double p_one = 0.5;        // bernoulli: probability of emitting 1
  double phase_theta = 0.0;  // radians; recorded, never used
  uint64_t seed = 0;
  uint64_t length = 0;

  friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

// Single-line key=value form, e.g. "kind=bernoulli p=0.99 seed=42 len=1048576".
std::string to_line(const SourceSpec& spec);
SourceSpec spec_from_line(std::string_view line);

// First `length` bits of the concatenation of all binary strings in
// length-then-lexicographic order: 0, 1, 00, 01, 10, 11, 000, ...
BitString champernowne(uint64_t length);

// Independent bits, each 1 with probability p_one. Sampling draws a 53-bit
// uniform variate from a std::mt19937_64 stream seeded with `seed` and
// compares it against the threshold, so identical arguments reproduce
// identical bits on every platform.
BitString bernoulli_bits(double p_one, uint64_t seed, uint64_t length);

// Raw balanced stream: successive std::mt19937_64 outputs, each contributing
// its 64 bits most significant first.
BitString prng_bits(uint64_t seed, uint64_t length);

// Born-rule probability of outcome 1 for the state amp0|0> + amp1|1>.
// The amplitudes must be normalized within 1e-9.
double amplitude_to_p(double amp0, double amp1);

BitString generate(const SourceSpec& spec);

}  // namespace randcert
