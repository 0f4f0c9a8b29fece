#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "randcert/bitstring.hpp"

namespace randcert {

// Occurrence counts of every n-bit pattern among the floor(L/n) consecutive
// non-overlapping blocks of a sequence; trailing remainder bits are ignored.
struct BlockCounts {
  unsigned n = 0;
  uint64_t total_blocks = 0;
  std::vector<uint64_t> counts;  // indexed by pattern, first block bit = MSB
};

BlockCounts count_blocks(const BitString& x, unsigned n);

// Frequency tolerance sqrt(log2(L) / L); needs L >= 2.
double epsilon(uint64_t length);

// Largest tested block length, floor(log2(log2(L))) and at least 1;
// needs L >= 4.
unsigned max_block_len(uint64_t length);

// floor(L/n) * 2^-n, the count a perfectly balanced source would show.
double expected_count(uint64_t length, unsigned n);

struct BlockLengthStats {
  unsigned n = 0;
  double max_deviation = 0.0;
  std::string worst_pattern;
  bool pass = false;
};

// Verdict and per-block-length deviations. The sequence passes at block
// length n when every pattern's frequency deviation |count/floor(L/n) - 2^-n|
// stays strictly below epsilon(L); the verdict is the conjunction over
// n = 1 .. max_block_len(L).
struct BorelReport {
  uint64_t length = 0;
  double epsilon = 0.0;
  unsigned max_block_len = 0;
  std::vector<BlockLengthStats> per_n;
  bool verdict = false;
};

BorelReport borel_test(const BitString& x);

// Stable report document; field names are frozen.
nlohmann::json to_json(const BorelReport& r);

// Number of nonempty binary strings shorter than n bits: 2^n - 2.
uint64_t shorter_strings_count(unsigned n);

// Pigeonhole bound on length-n strings no shorter string can stand for:
// always 2.
uint64_t incompressible_lower_bound(unsigned n);

// n-character rendering of a pattern index, first block bit first.
std::string pattern_string(uint64_t pattern, unsigned n);

}  // namespace randcert
