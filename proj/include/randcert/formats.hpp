#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "randcert/bitstring.hpp"

namespace randcert {

// Malformed input data (bad characters, inconsistent lengths, corrupt files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk encodings of a bit sequence.
//   ascii01    characters '0'/'1', whitespace ignored
//   hex        hex digits, whitespace ignored, each nibble MSB-first
//   packed_msb raw bytes, most significant bit of each byte first
enum class BitFormat { ascii01, hex, packed_msb };

BitFormat format_from_name(std::string_view name);  // ParseError on unknown name
std::string_view format_name(BitFormat f);

// Decodes raw file content. For hex and packed_msb, whose grain is 4 and 8
// bits, bit_length gives the exact length when it is not a multiple of the
// grain; it must lie within one grain of the decoded size. For ascii01 a
// provided bit_length must match exactly.
BitString parse_bits(std::string_view raw, BitFormat format,
                     std::optional<uint64_t> bit_length = std::nullopt);

// Inverse writer. hex and packed_msb zero-pad the final nibble/byte; recover
// the original length via the bit_length argument of parse_bits.
std::string render_bits(const BitString& x, BitFormat format);

}  // namespace randcert
