#pragma once

#include <cstddef>
#include <cstdint>

namespace randcert::kernels {

// Widest block the counting kernels accept; the 2^n count table stays small.
inline constexpr unsigned kMaxBlockBits = 24;

// Counting kernels over MSB-first packed words (BitString layout).
//
// count_ones: number of set bits among the first nbits (unused low bits of
// the final word must be zero, as BitString guarantees).
//
// block_histogram: splits the first nblocks*n bits into consecutive
// non-overlapping n-bit blocks and accumulates (does not zero) one count per
// pattern into counts[2^n]; the first bit of a block is the most significant
// bit of its pattern index. The word array must cover nblocks*n bits.
struct KernelSet {
  const char* name;
  uint64_t (*count_ones)(const uint64_t* words, size_t nbits);
  void (*block_histogram)(const uint64_t* words, size_t nblocks, unsigned n,
                          uint64_t* counts);
};

// Portable reference implementation; the equivalence baseline for the
// vector variants.
const KernelSet& scalar_kernels();

// AVX2 variant, or nullptr when the build or the CPU lacks it.
const KernelSet* avx2_kernels();

// Best available set. RANDCERT_KERNELS=scalar|avx2 overrides (an unavailable
// request falls back to scalar).
const KernelSet& active_kernels();

}  // namespace randcert::kernels
