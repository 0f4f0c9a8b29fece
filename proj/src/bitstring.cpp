#include "randcert/bitstring.hpp"

#include <stdexcept>

namespace randcert {

namespace {

// Clears the unused low bits of the final word.
void mask_tail(std::vector<uint64_t>& words, size_t nbits) {
  if (unsigned off = nbits & 63; off != 0 && !words.empty())
    words.back() &= ~uint64_t{0} << (64 - off);
}

}  // namespace

bool BitString::bit(size_t i) const {
  if (i >= nbits_) throw std::out_of_range("BitString::bit: index past end");
  return (words_[i >> 6] >> (63 - (i & 63))) & 1;
}

BitString BitString::slice(size_t start, size_t len) const {
  if (start > nbits_ || len > nbits_ - start)
    throw std::out_of_range("BitString::slice: range past end");
  std::vector<uint64_t> out((len + 63) / 64);
  for (size_t j = 0; j < out.size(); ++j) {
    size_t pos = start + j * 64;
    size_t wi = pos >> 6;
    unsigned off = pos & 63;
    uint64_t v = words_[wi] << off;
    if (off != 0 && wi + 1 < words_.size()) v |= words_[wi + 1] >> (64 - off);
    out[j] = v;
  }
  mask_tail(out, len);
  return BitString(std::move(out), len);
}

BitString BitString::complemented() const {
  std::vector<uint64_t> out(words_);
  for (uint64_t& w : out) w = ~w;
  mask_tail(out, nbits_);
  return BitString(std::move(out), nbits_);
}

void BitStringBuilder::append_bits(uint64_t value, unsigned n) {
  if (n > 64) throw std::invalid_argument("append_bits: at most 64 bits");
  if (n == 0) return;
  if (n < 64) value &= (uint64_t{1} << n) - 1;
  unsigned off = nbits_ & 63;
  if (off == 0) words_.push_back(0);
  unsigned room = 64 - off;
  if (n <= room) {
    words_.back() |= value << (room - n);
  } else {
    words_.back() |= value >> (n - room);
    words_.push_back(value << (64 - (n - room)));
  }
  nbits_ += n;
}

void BitStringBuilder::append_run(bool b, uint64_t count) {
  const uint64_t fill = b ? ~uint64_t{0} : 0;
  while (count > 0) {
    unsigned chunk = count < 64 ? unsigned(count) : 64;
    append_bits(fill, chunk);
    count -= chunk;
  }
}

void BitStringBuilder::append(const BitString& x) {
  size_t full = x.size() / 64;
  for (size_t i = 0; i < full; ++i) append_bits(x.words()[i], 64);
  if (unsigned rem = x.size() & 63)
    append_bits(x.words()[full] >> (64 - rem), rem);
}

BitString BitStringBuilder::build() {
  BitString out(std::move(words_), nbits_);
  words_.clear();
  nbits_ = 0;
  return out;
}

}  // namespace randcert
