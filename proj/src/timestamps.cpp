#include "randcert/timestamps.hpp"

#include <charconv>
#include <stdexcept>

#include "randcert/formats.hpp"

namespace randcert {

TimestampSeries TimestampSeries::from_values(std::vector<uint64_t> values) {
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1])
      throw ParseError("timestamps must be non-decreasing (violation at entry " +
                       std::to_string(i) + ")");
  TimestampSeries s;
  s.values_ = std::move(values);
  return s;
}

TimestampSeries parse_timestamps(std::string_view text) {
  std::vector<uint64_t> values;
  size_t pos = 0;
  size_t lineno = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (line.empty()) continue;
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || p != line.data() + line.size())
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected an unsigned decimal integer");
    values.push_back(v);
  }
  return TimestampSeries::from_values(std::move(values));
}

BitString extract_bits_from_timestamps(const TimestampSeries& series) {
  const auto& t = series.values();
  if (t.size() < 3)
    throw std::invalid_argument("need at least 3 timestamps to extract bits");
  BitStringBuilder b;
  // Differences d_i = t[i+1] - t[i], paired (d_0,d_1), (d_2,d_3), ...;
  // a trailing unpaired difference is discarded.
  size_t ndiff = t.size() - 1;
  for (size_t k = 0; k + 1 < ndiff; k += 2) {
    uint64_t a = t[k + 1] - t[k];
    uint64_t c = t[k + 2] - t[k + 1];
    if (a < c)
      b.push(true);
    else if (a > c)
      b.push(false);
    // tie: emit nothing
  }
  return b.build();
}

}  // namespace randcert
