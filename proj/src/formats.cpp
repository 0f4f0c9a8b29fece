#include "randcert/formats.hpp"

#include <cctype>

namespace randcert {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Applies an out-of-band bit length to a grain-padded decode.
BitString apply_bit_length(BitString x, std::optional<uint64_t> bit_length,
                           unsigned grain) {
  if (!bit_length) return x;
  uint64_t want = *bit_length;
  if (want > x.size() || x.size() - want >= grain)
    throw ParseError("bit length " + std::to_string(want) +
                     " inconsistent with decoded size " +
                     std::to_string(x.size()));
  return x.slice(0, want);
}

}  // namespace

BitFormat format_from_name(std::string_view name) {
  if (name == "ascii01") return BitFormat::ascii01;
  if (name == "hex") return BitFormat::hex;
  if (name == "packed_msb") return BitFormat::packed_msb;
  throw ParseError("unknown bit format: " + std::string(name));
}

std::string_view format_name(BitFormat f) {
  switch (f) {
    case BitFormat::ascii01: return "ascii01";
    case BitFormat::hex: return "hex";
    case BitFormat::packed_msb: return "packed_msb";
  }
  return "?";
}

BitString parse_bits(std::string_view raw, BitFormat format,
                     std::optional<uint64_t> bit_length) {
  BitStringBuilder b;
  switch (format) {
    case BitFormat::ascii01:
      b.reserve_bits(raw.size());
      for (char c : raw) {
        if (c == '0' || c == '1')
          b.push(c == '1');
        else if (!is_space(c))
          throw ParseError(std::string("invalid character for ascii01: '") + c + "'");
      }
      if (bit_length && *bit_length != b.size())
        throw ParseError("bit length does not match ascii01 content");
      return b.build();
    case BitFormat::hex: {
      b.reserve_bits(raw.size() * 4);
      for (char c : raw) {
        if (int v = hex_value(c); v >= 0)
          b.append_bits(uint64_t(v), 4);
        else if (!is_space(c))
          throw ParseError(std::string("invalid character for hex: '") + c + "'");
      }
      return apply_bit_length(b.build(), bit_length, 4);
    }
    case BitFormat::packed_msb: {
      b.reserve_bits(raw.size() * 8);
      for (unsigned char c : raw) b.append_bits(c, 8);
      return apply_bit_length(b.build(), bit_length, 8);
    }
  }
  throw ParseError("unknown bit format");
}

std::string render_bits(const BitString& x, BitFormat format) {
  std::string out;
  switch (format) {
    case BitFormat::ascii01:
      out.reserve(x.size());
      for (size_t i = 0; i < x.size(); ++i) out.push_back(x.bit(i) ? '1' : '0');
      return out;
    case BitFormat::hex: {
      static constexpr char digits[] = "0123456789ABCDEF";
      size_t nibbles = (x.size() + 3) / 4;
      out.reserve(nibbles);
      for (size_t k = 0; k < nibbles; ++k) {
        unsigned v = 0;
        for (unsigned j = 0; j < 4; ++j) {
          size_t i = k * 4 + j;
          v = (v << 1) | (i < x.size() ? unsigned(x.bit(i)) : 0u);
        }
        out.push_back(digits[v]);
      }
      return out;
    }
    case BitFormat::packed_msb: {
      size_t nbytes = (x.size() + 7) / 8;
      out.reserve(nbytes);
      auto words = x.words();
      for (size_t k = 0; k < nbytes; ++k) {
        unsigned off = unsigned(k & 7) * 8;
        out.push_back(char(uint8_t(words[k >> 3] >> (56 - off))));
      }
      return out;
    }
  }
  throw ParseError("unknown bit format");
}

}  // namespace randcert
