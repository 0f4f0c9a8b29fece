// AVX2 variants of the counting kernels. Compiled with -mavx2 on x86-64 only;
// callers reach this code through the runtime dispatch in kernels_dispatch.cpp.

#include "randcert/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cassert>

namespace randcert::kernels {
namespace detail {

namespace {

// Nibble-LUT popcount (Mula); per-64-bit-lane sums.
inline __m256i popcount256_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3,
                                          2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                          1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hsum_epi64(__m256i v) {
  __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v),
                            _mm256_extracti128_si256(v, 1));
  return uint64_t(_mm_cvtsi128_si64(s)) + uint64_t(_mm_extract_epi64(s, 1));
}

uint64_t popcount_words(const uint64_t* words, size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(acc, popcount256_epi64(v));
  }
  uint64_t total = hsum_epi64(acc);
  for (; i < nwords; ++i) total += uint64_t(_mm_popcnt_u64(words[i]));
  return total;
}

uint64_t count_ones_avx2(const uint64_t* words, size_t nbits) {
  size_t full = nbits / 64;
  uint64_t total = popcount_words(words, full);
  if (unsigned tail = nbits & 63)
    total += uint64_t(_mm_popcnt_u64(words[full] & (~uint64_t{0} << (64 - tail))));
  return total;
}

// First bit of every 2-bit block sits at an odd bit position.
constexpr uint64_t kPairMask = 0xAAAA'AAAA'AAAA'AAAAull;
// First bit of every 4-bit block sits at bit position 3 mod 4.
constexpr uint64_t kNibbleMask = 0x8888'8888'8888'8888ull;

void pair_histogram(const uint64_t* words, size_t nblocks, uint64_t* counts) {
  const size_t full_words = nblocks / 32;
  const __m256i mask = _mm256_set1_epi64x(int64_t(kPairMask));
  __m256i a11 = _mm256_setzero_si256();
  __m256i a10 = _mm256_setzero_si256();
  __m256i a01 = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= full_words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    __m256i hi = _mm256_and_si256(v, mask);
    __m256i lo = _mm256_and_si256(_mm256_slli_epi64(v, 1), mask);
    a11 = _mm256_add_epi64(a11, popcount256_epi64(_mm256_and_si256(hi, lo)));
    a10 = _mm256_add_epi64(a10, popcount256_epi64(_mm256_andnot_si256(lo, hi)));
    a01 = _mm256_add_epi64(a01, popcount256_epi64(_mm256_andnot_si256(hi, lo)));
  }
  uint64_t c11 = hsum_epi64(a11);
  uint64_t c10 = hsum_epi64(a10);
  uint64_t c01 = hsum_epi64(a01);
  for (; i < full_words; ++i) {
    uint64_t hi = words[i] & kPairMask;
    uint64_t lo = (words[i] << 1) & kPairMask;
    c11 += uint64_t(_mm_popcnt_u64(hi & lo));
    c10 += uint64_t(_mm_popcnt_u64(hi & ~lo));
    c01 += uint64_t(_mm_popcnt_u64(~hi & lo));
  }
  size_t done = full_words * 32;
  counts[3] += c11;
  counts[2] += c10;
  counts[1] += c01;
  counts[0] += done - c11 - c10 - c01;
  if (done < nblocks)
    scalar_kernels().block_histogram(words + full_words, nblocks - done, 2,
                                     counts);
}

void nibble_histogram(const uint64_t* words, size_t nblocks, uint64_t* counts) {
  const size_t full_words = nblocks / 16;
  const __m256i mask = _mm256_set1_epi64x(int64_t(kNibbleMask));
  __m256i acc[16];
  for (auto& a : acc) a = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= full_words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    __m256i t[4] = {v, _mm256_slli_epi64(v, 1), _mm256_slli_epi64(v, 2),
                    _mm256_slli_epi64(v, 3)};
    for (unsigned p = 0; p < 16; ++p) {
      // t[j] holds block bit j in place; complement selects the 0 case
      __m256i m = mask;
      for (unsigned j = 0; j < 4; ++j) {
        __m256i bit = (p >> (3 - j)) & 1 ? t[j] : _mm256_andnot_si256(t[j], mask);
        m = _mm256_and_si256(m, bit);
      }
      acc[p] = _mm256_add_epi64(acc[p], popcount256_epi64(m));
    }
  }
  uint64_t c[16];
  for (unsigned p = 0; p < 16; ++p) c[p] = hsum_epi64(acc[p]);
  for (; i < full_words; ++i) {
    uint64_t t[4] = {words[i], words[i] << 1, words[i] << 2, words[i] << 3};
    for (unsigned p = 0; p < 16; ++p) {
      uint64_t m = kNibbleMask;
      for (unsigned j = 0; j < 4; ++j)
        m &= (p >> (3 - j)) & 1 ? t[j] : ~t[j];
      c[p] += uint64_t(_mm_popcnt_u64(m));
    }
  }
  for (unsigned p = 0; p < 16; ++p) counts[p] += c[p];
  size_t done = full_words * 16;
  if (done < nblocks)
    scalar_kernels().block_histogram(words + full_words, nblocks - done, 4,
                                     counts);
}

void block_histogram_avx2(const uint64_t* words, size_t nblocks, unsigned n,
                          uint64_t* counts) {
  assert(n >= 1 && n <= kMaxBlockBits);
  switch (n) {
    case 1: {
      uint64_t ones = count_ones_avx2(words, nblocks);
      counts[1] += ones;
      counts[0] += nblocks - ones;
      return;
    }
    case 2:
      pair_histogram(words, nblocks, counts);
      return;
    case 4:
      nibble_histogram(words, nblocks, counts);
      return;
    default:
      scalar_kernels().block_histogram(words, nblocks, n, counts);
      return;
  }
}

constexpr KernelSet kAvx2{"avx2", &count_ones_avx2, &block_histogram_avx2};

}  // namespace

const KernelSet& avx2_impl() { return kAvx2; }

}  // namespace detail
}  // namespace randcert::kernels

#endif  // __AVX2__
