// randcert: batch CLI for bit-sequence generation, normality testing,
// run-length compression, halting-probability experiments, and timestamp
// ingestion. Reports go to stdout as JSON, diagnostics to stderr.
//
// Exit codes: 0 success (or test verdict pass), 1 test verdict fail,
// 2 usage error, 3 input/format error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "randcert/borel.hpp"
#include "randcert/formats.hpp"
#include "randcert/generators.hpp"
#include "randcert/omega.hpp"
#include "randcert/rle.hpp"
#include "randcert/timestamps.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFail = 1;
constexpr int kUsage = 2;
constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw randcert::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw randcert::ParseError("read failure on " + path);
  return std::move(buf).str();
}

void write_output(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout.write(content.data(), std::streamsize(content.size()));
    std::cout.flush();
    if (!std::cout) throw randcert::ParseError("write failure on stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw randcert::ParseError("cannot create " + path);
  out.write(content.data(), std::streamsize(content.size()));
  out.flush();
  if (!out) throw randcert::ParseError("write failure on " + path);
}

std::string rendered_with_newline(const randcert::BitString& bits,
                                  randcert::BitFormat fmt) {
  std::string body = randcert::render_bits(bits, fmt);
  if (fmt != randcert::BitFormat::packed_msb) body.push_back('\n');
  return body;
}

struct GenOptions {
  std::string kind;
  std::string spec_line;
  std::optional<double> p;
  std::optional<double> amp0, amp1;
  double theta = 0.0;
  bool theta_given = false;
  uint64_t seed = 0;
  bool seed_given = false;
  std::optional<uint64_t> len;
  std::string format = "ascii01";
  std::string out = "-";
};

int run_gen(const GenOptions& o) {
  randcert::SourceSpec spec;
  if (!o.spec_line.empty()) {
    if (!o.kind.empty() || o.p || o.amp0 || o.amp1 || o.len) {
      std::cerr << "gen: --spec excludes the kind argument and per-field flags\n";
      return kUsage;
    }
    try {
      spec = randcert::spec_from_line(o.spec_line);
    } catch (const randcert::ParseError& e) {
      std::cerr << "gen: bad --spec: " << e.what() << "\n";
      return kUsage;
    }
  } else {
    if (o.kind.empty() || !o.len) {
      std::cerr << "gen: need a source kind and --len (or --spec)\n";
      return kUsage;
    }
    spec.length = *o.len;
    spec.seed = o.seed;
    spec.phase_theta = o.theta;
    if (o.kind == "champernowne") {
      spec.kind = randcert::SourceKind::champernowne;
      if (o.p || o.amp0 || o.amp1 || o.seed_given || o.theta_given) {
        std::cerr << "gen: champernowne takes no probability, seed, or phase flags\n";
        return kUsage;
      }
    } else if (o.kind == "bernoulli") {
      spec.kind = randcert::SourceKind::bernoulli;
      if (o.p && (o.amp0 || o.amp1)) {
        std::cerr << "gen: --p and --amp0/--amp1 are mutually exclusive\n";
        return kUsage;
      }
      if (o.amp0.has_value() != o.amp1.has_value()) {
        std::cerr << "gen: --amp0 and --amp1 go together\n";
        return kUsage;
      }
      if (o.amp0) {
        try {
          spec.p_one = randcert::amplitude_to_p(*o.amp0, *o.amp1);
        } catch (const std::invalid_argument& e) {
          std::cerr << "gen: " << e.what() << "\n";
          return kUsage;
        }
      } else if (o.p) {
        if (!(*o.p >= 0.0 && *o.p <= 1.0)) {
          std::cerr << "gen: --p must lie in [0, 1]\n";
          return kUsage;
        }
        spec.p_one = *o.p;
      }
    } else if (o.kind == "prng") {
      spec.kind = randcert::SourceKind::prng;
      if (o.p || o.amp0 || o.amp1 || o.theta_given) {
        std::cerr << "gen: prng takes no probability or phase flags\n";
        return kUsage;
      }
    } else {
      std::cerr << "gen: unknown source kind '" << o.kind << "'\n";
      return kUsage;
    }
  }
  randcert::BitString bits = randcert::generate(spec);
  write_output(o.out, rendered_with_newline(
                          bits, randcert::format_from_name(o.format)));
  std::cerr << "generated " << randcert::to_line(spec) << "\n";
  return kOk;
}

struct TestOptions {
  std::string in;
  std::string format = "ascii01";
  std::optional<uint64_t> bit_length;
};

int run_test(const TestOptions& o) {
  randcert::BitString bits =
      randcert::parse_bits(read_file(o.in), randcert::format_from_name(o.format),
                           o.bit_length);
  if (bits.size() < 4)
    throw randcert::ParseError("input has " + std::to_string(bits.size()) +
                               " bits; the test needs at least 4");
  randcert::BorelReport report = randcert::borel_test(bits);
  std::cout << randcert::to_json(report).dump() << "\n";
  return report.verdict ? kOk : kVerdictFail;
}

struct CompressOptions {
  std::string in;
  std::string out;
  bool decode = false;
  std::string format = "ascii01";
  std::optional<uint64_t> bit_length;
};

int run_compress(const CompressOptions& o) {
  if (o.decode) {
    randcert::RunLengthCode code = randcert::parse_rlc(read_file(o.in));
    randcert::BitString bits;
    try {
      bits = randcert::rle_decode(code);
    } catch (const std::invalid_argument& e) {
      throw randcert::ParseError(e.what());
    }
    write_output(o.out, rendered_with_newline(
                            bits, randcert::format_from_name(o.format)));
    std::cout << nlohmann::json{{"output_bits", bits.size()}}.dump() << "\n";
    return kOk;
  }
  randcert::BitString bits =
      randcert::parse_bits(read_file(o.in), randcert::format_from_name(o.format),
                           o.bit_length);
  randcert::RunLengthCode code = randcert::rle_encode(bits);
  std::string payload = randcert::serialize_payload(code);
  write_output(o.out, randcert::serialize_rlc(code));
  nlohmann::json report{{"input_bits", bits.size()},
                        {"payload_bytes", payload.size()}};
  report["ratio"] = bits.empty()
                        ? nlohmann::json()
                        : nlohmann::json(randcert::compression_ratio(bits));
  std::cout << report.dump() << "\n";
  return kOk;
}

struct OmegaEnumerateOptions {
  unsigned max_len = 6;
  uint64_t budget = 100;
  std::string programs_out;
};

int run_omega_enumerate(const OmegaEnumerateOptions& o) {
  randcert::omega::OmegaEstimate est =
      randcert::omega::omega_lower_bound(o.max_len, o.budget);
  if (!o.programs_out.empty()) {
    std::string lines;
    for (const auto& p : randcert::omega::enumerate_accepted(o.max_len)) {
      lines += randcert::render_bits(p.code, randcert::BitFormat::ascii01);
      lines += '\n';
    }
    write_output(o.programs_out, lines);
  }
  std::cout << randcert::omega::to_json(est).dump() << "\n";
  return kOk;
}

struct OmegaMonteCarloOptions {
  uint64_t seeds = 0;
  unsigned max_flips = 6;
  uint64_t budget = 100;
};

int run_omega_montecarlo(const OmegaMonteCarloOptions& o) {
  randcert::omega::MonteCarloResult r =
      randcert::omega::omega_monte_carlo(o.seeds, o.max_flips, o.budget);
  std::cout << randcert::omega::to_json(r).dump() << "\n";
  return kOk;
}

struct IngestOptions {
  std::string in;
  std::string out = "-";
  std::string format = "ascii01";
};

int run_ingest(const IngestOptions& o) {
  randcert::TimestampSeries series = randcert::parse_timestamps(read_file(o.in));
  if (series.size() < 3)
    throw randcert::ParseError("need at least 3 timestamps, got " +
                               std::to_string(series.size()));
  randcert::BitString bits = randcert::extract_bits_from_timestamps(series);
  write_output(o.out, rendered_with_newline(
                          bits, randcert::format_from_name(o.format)));
  std::cerr << "extracted " << bits.size() << " bits from " << series.size()
            << " timestamps\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-sequence randomness certification toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a reference sequence");
  gen_cmd->add_option("kind", gen.kind, "champernowne | bernoulli | prng");
  gen_cmd->add_option("--spec", gen.spec_line, "single-line source spec");
  gen_cmd->add_option("--len", gen.len, "bits to produce");
  gen_cmd->add_option("--p", gen.p, "probability of a 1 (bernoulli)");
  gen_cmd->add_option("--amp0", gen.amp0, "amplitude of |0> (bernoulli)");
  gen_cmd->add_option("--amp1", gen.amp1, "amplitude of |1> (bernoulli)");
  gen_cmd->add_option("--theta", gen.theta, "relative phase, metadata only")
      ->each([&gen](const std::string&) { gen.theta_given = true; });
  gen_cmd->add_option("--seed", gen.seed, "generator seed")
      ->each([&gen](const std::string&) { gen.seed_given = true; });
  gen_cmd->add_option("--format", gen.format, "ascii01 | hex | packed_msb")
      ->check(CLI::IsMember({"ascii01", "hex", "packed_msb"}));
  gen_cmd->add_option("--out", gen.out, "output path, - for stdout");

  TestOptions test;
  CLI::App* test_cmd = app.add_subcommand(
      "test",
      "block-frequency normality verdict (a necessary, never sufficient, "
      "randomness condition)");
  test_cmd->add_option("input", test.in, "bit file")->required();
  test_cmd->add_option("--format", test.format, "ascii01 | hex | packed_msb")
      ->check(CLI::IsMember({"ascii01", "hex", "packed_msb"}));
  test_cmd->add_option("--bit-length", test.bit_length,
                       "exact bit count for packed/hex input");

  CompressOptions comp;
  CLI::App* comp_cmd =
      app.add_subcommand("compress", "run-length encode or decode");
  comp_cmd->add_option("input", comp.in, "input path")->required();
  comp_cmd->add_option("output", comp.out, "output path")->required();
  comp_cmd->add_flag("--decode", comp.decode, "decode an .rlc file");
  comp_cmd->add_option("--format", comp.format,
                       "bit-file format on the uncompressed side")
      ->check(CLI::IsMember({"ascii01", "hex", "packed_msb"}));
  comp_cmd->add_option("--bit-length", comp.bit_length,
                       "exact bit count for packed/hex input");

  CLI::App* omega_cmd =
      app.add_subcommand("omega", "halting-probability experiments");
  omega_cmd->require_subcommand(1);
  OmegaEnumerateOptions oenum;
  CLI::App* oenum_cmd = omega_cmd->add_subcommand(
      "enumerate", "exhaustive lower bound over short programs");
  oenum_cmd->add_option("--max-len", oenum.max_len, "max program bits")
      ->check(CLI::Range(3u, randcert::omega::kMaxEnumerationLen));
  oenum_cmd->add_option("--budget", oenum.budget, "step budget per program")
      ->check(CLI::Range(uint64_t{1}, UINT64_MAX));
  oenum_cmd->add_option("--programs-out", oenum.programs_out,
                        "write accepted programs, ascii01, one per line");
  OmegaMonteCarloOptions omc;
  CLI::App* omc_cmd =
      omega_cmd->add_subcommand("montecarlo", "seeded coin-flip estimate");
  omc_cmd->add_option("--seeds", omc.seeds, "number of coin-flip rounds")
      ->required()
      ->check(CLI::Range(uint64_t{1}, UINT64_MAX));
  omc_cmd->add_option("--max-flips", omc.max_flips, "flips before abandoning")
      ->check(CLI::Range(3u, 62u));
  omc_cmd->add_option("--budget", omc.budget, "step budget per program")
      ->check(CLI::Range(uint64_t{1}, UINT64_MAX));

  IngestOptions ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "bits from a timestamp file");
  ingest_cmd->add_option("input", ingest.in, "one event time per line")
      ->required();
  ingest_cmd->add_option("--out", ingest.out, "output path, - for stdout");
  ingest_cmd->add_option("--format", ingest.format, "output bit format")
      ->check(CLI::IsMember({"ascii01", "hex", "packed_msb"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*test_cmd) return run_test(test);
    if (*comp_cmd) return run_compress(comp);
    if (*oenum_cmd) return run_omega_enumerate(oenum);
    if (*omc_cmd) return run_omega_montecarlo(omc);
    if (*ingest_cmd) return run_ingest(ingest);
  } catch (const randcert::ParseError& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << app.get_name() << ": " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}
