#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace randcert {

// Immutable finite sequence of bits, packed MSB-first into 64-bit words:
// bit i of the sequence lives at bit (63 - i % 64) of words()[i / 64].
// Unused low bits of the final word are always zero, so whole-word
// operations (popcount, equality) need no masking.
class BitString {
 public:
  BitString() = default;

  size_t size() const noexcept { return nbits_; }
  bool empty() const noexcept { return nbits_ == 0; }

  // Bit at position i; throws std::out_of_range past the end.
  bool bit(size_t i) const;

  // Contiguous sub-sequence [start, start + len); throws std::out_of_range
  // when the range does not fit.
  BitString slice(size_t start, size_t len) const;

  // Same length, every bit flipped.
  BitString complemented() const;

  std::span<const uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  friend class BitStringBuilder;
  BitString(std::vector<uint64_t> words, size_t nbits)
      : words_(std::move(words)), nbits_(nbits) {}

  std::vector<uint64_t> words_;
  size_t nbits_ = 0;
};

// Accumulates bits front to back. build() hands the storage over and leaves
// the builder empty for reuse.
class BitStringBuilder {
 public:
  void reserve_bits(size_t n) { words_.reserve((n + 63) / 64); }

  void push(bool b) {
    unsigned off = nbits_ & 63;
    if (off == 0) words_.push_back(0);
    words_.back() |= uint64_t{b} << (63 - off);
    ++nbits_;
  }

  // Appends the low n bits of value, most significant of those first.
  void append_bits(uint64_t value, unsigned n);

  // Appends count copies of the same bit.
  void append_run(bool b, uint64_t count);

  void append(const BitString& x);

  size_t size() const noexcept { return nbits_; }

  BitString build();

 private:
  std::vector<uint64_t> words_;
  size_t nbits_ = 0;
};

}  // namespace randcert
