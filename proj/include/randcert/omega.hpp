#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "randcert/bitstring.hpp"
#include "randcert/dyadic.hpp"
#include "randcert/tinypf.hpp"

namespace randcert::omega {

// Enumeration beyond this would stop being a desk-scale experiment.
inline constexpr unsigned kMaxEnumerationLen = 24;

// Every accepted program with code length <= max_len, in
// length-then-lexicographic order. Walks the code tree, closing a branch at
// each accepted program and pruning branches no extension can rescue.
// max_len must lie in [3, kMaxEnumerationLen].
std::vector<tinypf::Program> enumerate_accepted(unsigned max_len);

// Sum of 2^-|c| over the codes; throws std::invalid_argument when the set is
// not prefix-free (duplicates included) or a code is empty or longer than 62
// bits.
Dyadic kraft_sum(std::span<const BitString> codes);

// Dyadic lower bound on the halting probability from a bounded experiment:
// every accepted program up to max_len is run for at most step_budget steps.
struct OmegaEstimate {
  Dyadic value;
  unsigned max_len = 0;
  uint64_t step_budget = 0;
  uint64_t accepted = 0;
  uint64_t halted = 0;

  friend bool operator==(const OmegaEstimate&, const OmegaEstimate&) = default;
};

OmegaEstimate omega_lower_bound(unsigned max_len, uint64_t step_budget);

nlohmann::json to_json(const OmegaEstimate& e);

// One round of the coin-flip experiment: append fair flips until the string
// becomes an accepted program, or give up after max_flips.
struct CoinFlipSample {
  std::optional<tinypf::Program> program;  // empty = abandoned
  unsigned flips_used = 0;

  bool abandoned() const { return !program.has_value(); }
};

// flip() supplies the coin. max_flips must lie in [3, 62].
template <class FlipFn>
CoinFlipSample coinflip_sample_with(FlipFn&& flip, unsigned max_flips);

// Seeded coin: successive splitmix64 outputs, one flip per output (low bit).
CoinFlipSample coinflip_sample(uint64_t seed, unsigned max_flips);

// Halting-probability estimate from `seeds` independent coin-flip rounds
// (sample i uses seed i): the fraction of rounds that end in a program that
// halts within step_budget. estimate is empty when no round was accepted.
struct MonteCarloResult {
  std::optional<double> estimate;
  double std_error = 0.0;
  uint64_t seeds = 0;
  uint64_t accepted = 0;
  uint64_t halted = 0;
  uint64_t abandoned = 0;
  unsigned max_flips = 0;
  uint64_t step_budget = 0;
};

MonteCarloResult omega_monte_carlo(uint64_t seeds, unsigned max_flips,
                                   uint64_t step_budget);

nlohmann::json to_json(const MonteCarloResult& r);

namespace detail {
void check_max_flips(unsigned max_flips);
}

template <class FlipFn>
CoinFlipSample coinflip_sample_with(FlipFn&& flip, unsigned max_flips) {
  detail::check_max_flips(max_flips);
  uint64_t value = 0;  // flips so far, first flip at the top
  for (unsigned len = 1; len <= max_flips; ++len) {
    value = value << 1 | uint64_t(bool(flip()));
    BitStringBuilder b;
    b.append_bits(value, len);
    auto decoded = tinypf::decode_program(b.build());
    if (decoded.accepted()) return {std::move(*decoded.program), len};
  }
  return {std::nullopt, max_flips};
}

}  // namespace randcert::omega
