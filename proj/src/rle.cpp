#include "randcert/rle.hpp"

#include <stdexcept>

#include "randcert/formats.hpp"

namespace randcert {

namespace {

constexpr std::string_view kMagic = "RLC1";

void put_varint(std::string& out, uint64_t v) {
  while (v >= 0x80) {
    out.push_back(char(uint8_t(v) | 0x80));
    v >>= 7;
  }
  out.push_back(char(uint8_t(v)));
}

unsigned varint_size(uint64_t v) {
  unsigned n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

uint64_t get_varint(std::string_view in, size_t& pos) {
  uint64_t v = 0;
  unsigned shift = 0;
  while (true) {
    if (pos >= in.size()) throw ParseError("truncated varint");
    if (shift >= 64) throw ParseError("varint too long");
    uint8_t b = uint8_t(in[pos++]);
    uint64_t payload = b & 0x7f;
    if (shift == 63 && payload > 1) throw ParseError("varint overflows 64 bits");
    v |= payload << shift;
    if ((b & 0x80) == 0) return v;
    shift += 7;
  }
}

}  // namespace

RunLengthCode rle_encode(const BitString& x) {
  RunLengthCode c;
  if (x.empty()) return c;
  c.leading_zero = !x.bit(0);
  bool current = x.bit(0);
  uint64_t run = 1;
  for (size_t i = 1; i < x.size(); ++i) {
    if (x.bit(i) == current) {
      ++run;
    } else {
      c.runs.push_back(run);
      current = !current;
      run = 1;
    }
  }
  c.runs.push_back(run);
  return c;
}

BitString rle_decode(const RunLengthCode& c) {
  BitStringBuilder b;
  bool bit = !c.leading_zero;
  for (uint64_t run : c.runs) {
    if (run == 0) throw std::invalid_argument("run length 0 is not decodable");
    b.append_run(bit, run);
    bit = !bit;
  }
  return b.build();
}

std::string serialize_payload(const RunLengthCode& c) {
  std::string out;
  out.push_back(c.leading_zero ? 1 : 0);
  for (uint64_t run : c.runs) put_varint(out, run);
  return out;
}

RunLengthCode parse_payload(std::string_view payload) {
  if (payload.empty()) throw ParseError("missing run-length flag byte");
  if (payload[0] != 0 && payload[0] != 1)
    throw ParseError("run-length flag byte must be 0 or 1");
  RunLengthCode c;
  c.leading_zero = payload[0] == 1;
  size_t pos = 1;
  while (pos < payload.size()) {
    uint64_t run = get_varint(payload, pos);
    if (run == 0) throw ParseError("zero run length");
    c.runs.push_back(run);
  }
  return c;
}

std::string serialize_rlc(const RunLengthCode& c) {
  return std::string(kMagic) + serialize_payload(c);
}

RunLengthCode parse_rlc(std::string_view file) {
  if (file.substr(0, kMagic.size()) != kMagic)
    throw ParseError("not a run-length file (bad magic)");
  return parse_payload(file.substr(kMagic.size()));
}

double compression_ratio(const BitString& x) {
  if (x.empty())
    throw std::invalid_argument("compression ratio of an empty sequence");
  RunLengthCode c = rle_encode(x);
  uint64_t payload_bytes = 1;  // flag
  for (uint64_t run : c.runs) payload_bytes += varint_size(run);
  return double(payload_bytes * 8) / double(x.size());
}

}  // namespace randcert
