#include "randcert/generators.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

#include "randcert/formats.hpp"

namespace randcert {

namespace {

std::string_view kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::champernowne: return "champernowne";
    case SourceKind::bernoulli: return "bernoulli";
    case SourceKind::prng: return "prng";
  }
  return "?";
}

SourceKind kind_from_name(std::string_view name) {
  if (name == "champernowne") return SourceKind::champernowne;
  if (name == "bernoulli") return SourceKind::bernoulli;
  if (name == "prng") return SourceKind::prng;
  throw ParseError("unknown source kind: " + std::string(name));
}

std::string double_to_string(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

double double_from_string(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("bad numeric value: " + std::string(s));
  return v;
}

uint64_t u64_from_string(std::string_view s) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("bad unsigned value: " + std::string(s));
  return v;
}

}  // namespace

std::string to_line(const SourceSpec& spec) {
  std::string out = "kind=";
  out += kind_name(spec.kind);
  if (spec.kind == SourceKind::bernoulli) out += " p=" + double_to_string(spec.p_one);
  if (spec.kind != SourceKind::champernowne)
    out += " seed=" + std::to_string(spec.seed);
  out += " len=" + std::to_string(spec.length);
  if (spec.phase_theta != 0.0) out += " theta=" + double_to_string(spec.phase_theta);
  return out;
}

SourceSpec spec_from_line(std::string_view line) {
  SourceSpec spec;
  bool have_kind = false;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos == line.size()) break;
    size_t end = line.find(' ', pos);
    std::string_view tok = line.substr(pos, end == std::string_view::npos
                                                ? std::string_view::npos
                                                : end - pos);
    pos = end == std::string_view::npos ? line.size() : end + 1;
    size_t eq = tok.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value, got: " + std::string(tok));
    std::string_view key = tok.substr(0, eq);
    std::string_view val = tok.substr(eq + 1);
    if (key == "kind") {
      spec.kind = kind_from_name(val);
      have_kind = true;
    } else if (key == "p") {
      spec.p_one = double_from_string(val);
    } else if (key == "seed") {
      spec.seed = u64_from_string(val);
    } else if (key == "len") {
      spec.length = u64_from_string(val);
    } else if (key == "theta") {
      spec.phase_theta = double_from_string(val);
    } else {
      throw ParseError("unknown source key: " + std::string(key));
    }
  }
  if (!have_kind) throw ParseError("source line is missing kind=");
  return spec;
}

BitString champernowne(uint64_t length) {
  BitStringBuilder b;
  b.reserve_bits(length);
  for (unsigned len = 1; b.size() < length; ++len) {
    for (uint64_t v = 0; v >> len == 0; ++v) {
      uint64_t remaining = length - b.size();
      if (remaining == 0) break;
      if (remaining >= len) {
        b.append_bits(v, len);
      } else {
        // partial final string: keep its leading bits
        b.append_bits(v >> (len - remaining), unsigned(remaining));
      }
    }
  }
  return b.build();
}

BitString bernoulli_bits(double p_one, uint64_t seed, uint64_t length) {
  if (!(p_one >= 0.0 && p_one <= 1.0))
    throw std::invalid_argument("p_one must lie in [0, 1]");
  std::mt19937_64 eng(seed);
  BitStringBuilder b;
  b.reserve_bits(length);
  for (uint64_t i = 0; i < length; ++i) {
    double u = double(eng() >> 11) * 0x1.0p-53;  // uniform in [0, 1), 53-bit
    b.push(u < p_one);
  }
  return b.build();
}

BitString prng_bits(uint64_t seed, uint64_t length) {
  std::mt19937_64 eng(seed);
  BitStringBuilder b;
  b.reserve_bits(length);
  for (uint64_t produced = 0; produced < length; produced += 64) {
    uint64_t w = eng();
    unsigned take = length - produced < 64 ? unsigned(length - produced) : 64;
    b.append_bits(w >> (64 - take), take);
  }
  return b.build();
}

double amplitude_to_p(double amp0, double amp1) {
  double norm = amp0 * amp0 + amp1 * amp1;
  if (std::abs(norm - 1.0) > 1e-9)
    throw std::invalid_argument("amplitudes are not normalized");
  return amp1 * amp1;
}

BitString generate(const SourceSpec& spec) {
  switch (spec.kind) {
    case SourceKind::champernowne: return champernowne(spec.length);
    case SourceKind::bernoulli: return bernoulli_bits(spec.p_one, spec.seed, spec.length);
    case SourceKind::prng: return prng_bits(spec.seed, spec.length);
  }
  throw std::invalid_argument("unknown source kind");
}

}  // namespace randcert
