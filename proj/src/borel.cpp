#include "randcert/borel.hpp"

#include <cmath>
#include <stdexcept>

#include "randcert/kernels.hpp"

namespace randcert {

BlockCounts count_blocks(const BitString& x, unsigned n) {
  if (n == 0) throw std::invalid_argument("block length must be positive");
  if (n > x.size())
    throw std::invalid_argument("block length exceeds sequence length");
  if (n > kernels::kMaxBlockBits)
    throw std::invalid_argument("block length above supported maximum of " +
                                std::to_string(kernels::kMaxBlockBits));
  BlockCounts bc;
  bc.n = n;
  bc.total_blocks = x.size() / n;
  bc.counts.assign(size_t{1} << n, 0);
  kernels::active_kernels().block_histogram(x.words().data(), bc.total_blocks,
                                            n, bc.counts.data());
  return bc;
}

double epsilon(uint64_t length) {
  if (length < 2) throw std::invalid_argument("epsilon needs at least 2 bits");
  double L = double(length);
  return std::sqrt(std::log2(L) / L);
}

unsigned max_block_len(uint64_t length) {
  if (length < 4)
    throw std::invalid_argument("sequence too short to test (need >= 4 bits)");
  // floor(log2(log2(L))) = k  iff  2^(2^k) <= L < 2^(2^(k+1)); exact in
  // integer arithmetic, no rounding hazards near powers of two.
  unsigned k = 1;
  while (k < 5 && length >= (uint64_t{1} << (uint64_t{1} << (k + 1)))) ++k;
  return k;
}

double expected_count(uint64_t length, unsigned n) {
  if (n == 0) throw std::invalid_argument("block length must be positive");
  if (n > length)
    throw std::invalid_argument("block length exceeds sequence length");
  return double(length / n) * std::ldexp(1.0, -int(n));
}

BorelReport borel_test(const BitString& x) {
  BorelReport r;
  r.length = x.size();
  r.max_block_len = max_block_len(r.length);  // rejects length < 4
  r.epsilon = epsilon(r.length);
  r.verdict = true;
  for (unsigned n = 1; n <= r.max_block_len; ++n) {
    BlockCounts bc = count_blocks(x, n);
    const double uniform = std::ldexp(1.0, -int(n));
    const double blocks = double(bc.total_blocks);
    BlockLengthStats s;
    s.n = n;
    s.max_deviation = -1.0;
    uint64_t worst = 0;
    for (uint64_t p = 0; p < bc.counts.size(); ++p) {
      double dev = std::abs(double(bc.counts[p]) / blocks - uniform);
      if (dev > s.max_deviation) {
        s.max_deviation = dev;
        worst = p;
      }
    }
    s.worst_pattern = pattern_string(worst, n);
    s.pass = s.max_deviation < r.epsilon;  // strict: boundary equality fails
    r.verdict = r.verdict && s.pass;
    r.per_n.push_back(std::move(s));
  }
  return r;
}

nlohmann::json to_json(const BorelReport& r) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const auto& s : r.per_n)
    per_n.push_back({{"n", s.n},
                     {"max_deviation", s.max_deviation},
                     {"worst_pattern", s.worst_pattern},
                     {"pass", s.pass}});
  return {{"length", r.length},
          {"epsilon", r.epsilon},
          {"max_block_len", r.max_block_len},
          {"per_n", std::move(per_n)},
          {"verdict", r.verdict}};
}

uint64_t shorter_strings_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("string length must be positive");
  if (n > 63) throw std::invalid_argument("result would not fit 64 bits");
  return (uint64_t{1} << n) - 2;
}

uint64_t incompressible_lower_bound(unsigned n) {
  if (n == 0) throw std::invalid_argument("string length must be positive");
  // 2^n strings, at most 2^n - 2 shorter descriptions
  return 2;
}

std::string pattern_string(uint64_t pattern, unsigned n) {
  std::string s(n, '0');
  for (unsigned j = 0; j < n; ++j)
    if ((pattern >> (n - 1 - j)) & 1) s[j] = '1';
  return s;
}

}  // namespace randcert
