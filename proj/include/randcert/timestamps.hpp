#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "randcert/bitstring.hpp"

namespace randcert {

// Monotone non-decreasing sequence of integer event times.
class TimestampSeries {
 public:
  // Validates ordering; throws ParseError on a decrease.
  static TimestampSeries from_values(std::vector<uint64_t> values);

  const std::vector<uint64_t>& values() const noexcept { return values_; }
  size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<uint64_t> values_;
};

// One unsigned decimal integer per line; blank lines ignored.
TimestampSeries parse_timestamps(std::string_view text);

// Inter-arrival comparison extractor: over consecutive non-overlapping pairs
// of differences (d_{2k}, d_{2k+1}), emits 1 when the first is smaller, 0 when
// larger, nothing on ties. Needs at least 3 timestamps.
BitString extract_bits_from_timestamps(const TimestampSeries& series);

}  // namespace randcert
