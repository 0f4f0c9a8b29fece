#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "randcert/bitstring.hpp"

namespace randcert {

// Lengths of the maximal constant runs of a sequence, in order; leading_zero
// records the first bit. The empty sequence is canonically
// {leading_zero = false, runs = {}}.
struct RunLengthCode {
  bool leading_zero = false;
  std::vector<uint64_t> runs;

  friend bool operator==(const RunLengthCode&, const RunLengthCode&) = default;
};

RunLengthCode rle_encode(const BitString& x);

// Exact inverse of rle_encode; throws std::invalid_argument on a zero run.
BitString rle_decode(const RunLengthCode& c);

// Payload encoding: one flag byte (0/1 for leading_zero) followed by each run
// length as an LEB128 varint (7 data bits per byte, high bit = continuation).
std::string serialize_payload(const RunLengthCode& c);
RunLengthCode parse_payload(std::string_view payload);  // ParseError on damage

// .rlc file image: magic "RLC1" then the payload.
std::string serialize_rlc(const RunLengthCode& c);
RunLengthCode parse_rlc(std::string_view file);

// Payload size in bits divided by source length; > 1 means the code is larger
// than the sequence it stands for. Needs a nonempty sequence.
double compression_ratio(const BitString& x);

}  // namespace randcert
