#include "randcert/omega.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace randcert::omega {

namespace {

// splitmix64; the coin behind the seeded flip experiments.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

BitString code_from_value(uint64_t value, unsigned len) {
  BitStringBuilder b;
  b.append_bits(value, len);
  return b.build();
}

}  // namespace

namespace detail {
void check_max_flips(unsigned max_flips) {
  if (max_flips < 3 || max_flips > 62)
    throw std::invalid_argument("max_flips must lie in [3, 62]");
}
}  // namespace detail

std::vector<tinypf::Program> enumerate_accepted(unsigned max_len) {
  if (max_len < 3 || max_len > kMaxEnumerationLen)
    throw std::invalid_argument("max_len must lie in [3, " +
                                std::to_string(kMaxEnumerationLen) + "]");
  std::vector<tinypf::Program> accepted;
  // Level-by-level walk keeps length-then-lexicographic order for free:
  // extending an ordered level with 0 then 1 keeps the next level ordered.
  std::vector<uint64_t> frontier{0};  // extendable prefixes of length `len`
  std::vector<uint64_t> next;
  for (unsigned len = 1; len <= max_len; ++len) {
    next.clear();
    for (uint64_t prefix : frontier) {
      for (uint64_t bit = 0; bit <= 1; ++bit) {
        uint64_t value = prefix << 1 | bit;
        auto decoded = tinypf::decode_program(code_from_value(value, len));
        if (decoded.accepted())
          accepted.push_back(std::move(*decoded.program));
        else if (decoded.extendable())
          next.push_back(value);
        // otherwise the whole subtree is dead
      }
    }
    frontier.swap(next);
  }
  return accepted;
}

Dyadic kraft_sum(std::span<const BitString> codes) {
  std::vector<std::pair<unsigned, uint64_t>> keyed;
  keyed.reserve(codes.size());
  for (const BitString& c : codes) {
    if (c.empty() || c.size() > 62)
      throw std::invalid_argument("codes must be 1..62 bits long");
    keyed.emplace_back(unsigned(c.size()), c.words()[0] >> (64 - c.size()));
  }
  std::sort(keyed.begin(), keyed.end());
  // Marker-bit keys make every (length, value) pair a single integer.
  std::unordered_set<uint64_t> seen;
  seen.reserve(keyed.size() * 2);
  Dyadic sum;
  for (auto [len, value] : keyed) {
    for (unsigned plen = 1; plen < len; ++plen)
      if (seen.contains(uint64_t{1} << plen | value >> (len - plen)))
        throw std::invalid_argument("set is not prefix-free");
    if (!seen.insert(uint64_t{1} << len | value).second)
      throw std::invalid_argument("set is not prefix-free (duplicate code)");
    sum += Dyadic::power_of_two_reciprocal(len);
  }
  return sum;
}

OmegaEstimate omega_lower_bound(unsigned max_len, uint64_t step_budget) {
  if (step_budget == 0) throw std::invalid_argument("step budget must be >= 1");
  OmegaEstimate e;
  e.max_len = max_len;
  e.step_budget = step_budget;
  for (const tinypf::Program& p : enumerate_accepted(max_len)) {
    ++e.accepted;
    if (tinypf::run(p, step_budget).status == tinypf::RunOutcome::Status::halted) {
      ++e.halted;
      e.value += Dyadic::power_of_two_reciprocal(unsigned(p.code.size()));
    }
  }
  return e;
}

nlohmann::json to_json(const OmegaEstimate& e) {
  return {{"numerator", e.value.numerator()},
          {"denom_exp", e.value.denom_exp()},
          {"max_len", e.max_len},
          {"budget", e.step_budget},
          {"accepted", e.accepted},
          {"halted", e.halted}};
}

CoinFlipSample coinflip_sample(uint64_t seed, unsigned max_flips) {
  SplitMix64 rng{seed};
  return coinflip_sample_with([&] { return bool(rng.next() & 1); }, max_flips);
}

MonteCarloResult omega_monte_carlo(uint64_t seeds, unsigned max_flips,
                                   uint64_t step_budget) {
  if (seeds == 0) throw std::invalid_argument("need at least one seed");
  if (step_budget == 0) throw std::invalid_argument("step budget must be >= 1");
  detail::check_max_flips(max_flips);
  MonteCarloResult r;
  r.seeds = seeds;
  r.max_flips = max_flips;
  r.step_budget = step_budget;
  for (uint64_t seed = 0; seed < seeds; ++seed) {
    CoinFlipSample s = coinflip_sample(seed, max_flips);
    if (s.abandoned()) {
      ++r.abandoned;
      continue;
    }
    ++r.accepted;
    if (tinypf::run(*s.program, step_budget).status ==
        tinypf::RunOutcome::Status::halted)
      ++r.halted;
  }
  if (r.accepted > 0) {
    // Fraction of all rounds that land on a halting program; each program p
    // is reached with probability exactly 2^-|p|, so this estimates the
    // enumerated lower bound at the same cutoffs.
    double p = double(r.halted) / double(r.seeds);
    r.estimate = p;
    r.std_error = std::sqrt(p * (1.0 - p) / double(r.seeds));
  }
  return r;
}

nlohmann::json to_json(const MonteCarloResult& r) {
  nlohmann::json j{{"seeds", r.seeds},
                   {"accepted", r.accepted},
                   {"halted", r.halted},
                   {"abandoned", r.abandoned},
                   {"max_flips", r.max_flips},
                   {"budget", r.step_budget}};
  j["estimate"] = r.estimate ? nlohmann::json(*r.estimate) : nlohmann::json();
  j["std_error"] = r.estimate ? nlohmann::json(r.std_error) : nlohmann::json();
  return j;
}

}  // namespace randcert::omega
