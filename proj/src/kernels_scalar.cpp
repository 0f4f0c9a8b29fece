#include <bit>
#include <cassert>

#include "randcert/kernels.hpp"

namespace randcert::kernels {

namespace {

uint64_t count_ones_scalar(const uint64_t* words, size_t nbits) {
  size_t nwords = (nbits + 63) / 64;
  uint64_t total = 0;
  for (size_t i = 0; i < nwords; ++i) total += uint64_t(std::popcount(words[i]));
  return total;
}

void block_histogram_scalar(const uint64_t* words, size_t nblocks, unsigned n,
                            uint64_t* counts) {
  assert(n >= 1 && n <= kMaxBlockBits);
  size_t pos = 0;
  for (size_t k = 0; k < nblocks; ++k, pos += n) {
    size_t wi = pos >> 6;
    unsigned off = pos & 63;
    uint64_t v = words[wi] << off;
    if (off + n > 64) v |= words[wi + 1] >> (64 - off);
    ++counts[v >> (64 - n)];
  }
}

constexpr KernelSet kScalar{"scalar", &count_ones_scalar, &block_histogram_scalar};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace randcert::kernels
