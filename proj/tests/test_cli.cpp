// End-to-end checks of the command-line surface: exit-code contract,
// determinism, and the frozen report schemas, driven through the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("randcert_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void spit(const fs::path& p, std::string_view content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(content.data(), std::streamsize(content.size()));
}

CliResult run_cli(const std::string& args) {
  fs::path out = work_dir() / "stdout.txt";
  fs::path err = work_dir() / "stderr.txt";
  std::string cmd = std::string(RANDCERT_CLI_PATH) + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("gen writes the 34-bit constant") {
  fs::path f = work_dir() / "champ.bits";
  CliResult r = run_cli("gen champernowne --len 34 --format ascii01 --out " +
                        f.string());
  CHECK(r.code == 0);
  CHECK(slurp(f) == "0100011011000001010011100101110111\n");
}

TEST_CASE("gen degenerate bernoulli") {
  CliResult r = run_cli("gen bernoulli --p 1.0 --len 4 --out -");
  CHECK(r.code == 0);
  CHECK(r.out == "1111\n");
}

TEST_CASE("gen is byte-identical across runs") {
  fs::path a = work_dir() / "a.bits";
  fs::path b = work_dir() / "b.bits";
  std::string flags = "gen bernoulli --p 0.99 --seed 42 --len 1048576 --out ";
  CHECK(run_cli(flags + a.string()).code == 0);
  CHECK(run_cli(flags + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).size() == 1048577);  // bits + newline
}

TEST_CASE("gen accepts a spec line and amplitude flags") {
  CliResult spec = run_cli("gen --spec \"kind=prng seed=7 len=16\" --out -");
  CHECK(spec.code == 0);
  CliResult direct = run_cli("gen prng --seed 7 --len 16 --out -");
  CHECK(direct.out == spec.out);

  CliResult amp =
      run_cli("gen bernoulli --amp0 1 --amp1 0 --seed 3 --len 5 --out -");
  CHECK(amp.code == 0);
  CHECK(amp.out == "00000\n");
}

TEST_CASE("gen usage errors exit 2") {
  CHECK(run_cli("gen").code == 2);
  CHECK(run_cli("gen champernowne").code == 2);           // missing --len
  CHECK(run_cli("gen fairdice --len 4").code == 2);       // unknown kind
  CHECK(run_cli("gen champernowne --len 4 --p 0.5").code == 2);
  CHECK(run_cli("gen champernowne --len 4 --seed 1").code == 2);
  CHECK(run_cli("gen prng --len 4 --theta 0.5").code == 2);
  CHECK(run_cli("gen bernoulli --len 4 --p 0.5 --amp0 1 --amp1 0").code == 2);
  CHECK(run_cli("gen bernoulli --len 4 --p 1.5").code == 2);
  CHECK(run_cli("gen bernoulli --len 4 --amp0 0.6 --amp1 0.7").code == 2);
  CHECK(run_cli("gen prng --len 4 --spec \"kind=prng len=4\"").code == 2);
  CHECK(run_cli("bogus-subcommand").code == 2);
}

TEST_CASE("packed files carry odd lengths via --bit-length") {
  fs::path f = work_dir() / "odd.bits";
  CHECK(run_cli("gen prng --seed 2 --len 13 --format packed_msb --out " +
                f.string())
            .code == 0);
  CHECK(slurp(f).size() == 2);
  CliResult r = run_cli("test " + f.string() +
                        " --format packed_msb --bit-length 13");
  CHECK(nlohmann::json::parse(r.out)["length"] == 13);
  fs::path big = work_dir() / "odd_big.bits";
  CHECK(run_cli("gen prng --seed 2 --len 999 --format packed_msb --out " +
                big.string())
            .code == 0);
  CliResult ok = run_cli("test " + big.string() +
                         " --format packed_msb --bit-length 999");
  CHECK(nlohmann::json::parse(ok.out)["length"] == 999);
  // inconsistent out-of-band length
  CHECK(run_cli("test " + big.string() + " --format packed_msb --bit-length 37")
            .code == 3);
}

TEST_CASE("gen I/O failure exits 3") {
  CHECK(run_cli("gen prng --len 4 --out /nonexistent-dir/x.bits").code == 3);
}

TEST_CASE("test: verdicts map to exit codes and the schema is frozen") {
  fs::path ones = work_dir() / "ones.bits";
  spit(ones, std::string(1024, '1'));
  CliResult fail = run_cli("test " + ones.string() + " --format ascii01");
  CHECK(fail.code == 1);
  nlohmann::json j = nlohmann::json::parse(fail.out);
  CHECK(j["length"] == 1024);
  CHECK(j["verdict"] == false);
  CHECK(j["per_n"][0]["max_deviation"] == 0.5);

  fs::path balanced = work_dir() / "balanced.bits";
  CHECK(run_cli("gen prng --seed 7 --len 1048576 --format packed_msb --out " +
                balanced.string())
            .code == 0);
  CliResult pass =
      run_cli("test " + balanced.string() + " --format packed_msb");
  CHECK(pass.code == 0);
  CHECK(nlohmann::json::parse(pass.out)["verdict"] == true);
}

TEST_CASE("test: bad input exits 3") {
  fs::path tiny = work_dir() / "tiny.bits";
  spit(tiny, "011");
  CHECK(run_cli("test " + tiny.string()).code == 3);
  fs::path junk = work_dir() / "junk.bits";
  spit(junk, "01x1");
  CHECK(run_cli("test " + junk.string()).code == 3);
  CHECK(run_cli("test " + (work_dir() / "absent.bits").string()).code == 3);
}

TEST_CASE("compress round-trips byte-identically") {
  fs::path src = work_dir() / "src.bits";
  fs::path rlc = work_dir() / "src.rlc";
  fs::path back = work_dir() / "back.bits";
  CHECK(run_cli("gen bernoulli --p 0.9 --seed 5 --len 4096 --out " +
                src.string())
            .code == 0);
  CliResult enc = run_cli("compress " + src.string() + " " + rlc.string());
  CHECK(enc.code == 0);
  nlohmann::json ej = nlohmann::json::parse(enc.out);
  CHECK(ej["input_bits"] == 4096);
  CHECK(ej["ratio"].is_number());
  CHECK(slurp(rlc).substr(0, 4) == "RLC1");

  CliResult dec = run_cli("compress --decode " + rlc.string() + " " +
                          back.string());
  CHECK(dec.code == 0);
  CHECK(slurp(back) == slurp(src));
}

TEST_CASE("compress rejects a corrupt archive with exit 3") {
  fs::path bad = work_dir() / "bad.rlc";
  spit(bad, "NOPE");
  CHECK(run_cli("compress --decode " + bad.string() + " " +
                (work_dir() / "o.bits").string())
            .code == 3);
}

TEST_CASE("omega enumerate reports the exact dyadic bound") {
  CliResult r = run_cli("omega enumerate --max-len 6 --budget 100");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["numerator"] == 13);
  CHECK(j["denom_exp"] == 6);
  CHECK(j["accepted"] == 6);
  CHECK(j["halted"] == 6);

  CliResult small = run_cli("omega enumerate --max-len 3 --budget 1");
  nlohmann::json js = nlohmann::json::parse(small.out);
  CHECK(js["numerator"] == 1);
  CHECK(js["denom_exp"] == 3);
}

TEST_CASE("omega enumerate can dump the program list") {
  fs::path progs = work_dir() / "programs.txt";
  CliResult r = run_cli("omega enumerate --max-len 6 --budget 1 --programs-out " +
                        progs.string());
  CHECK(r.code == 0);
  CHECK(slurp(progs) ==
        "000\n001000\n010000\n101000\n110000\n111000\n");
}

TEST_CASE("omega montecarlo runs and validates parameters") {
  CliResult r =
      run_cli("omega montecarlo --seeds 20000 --max-flips 6 --budget 100");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["seeds"] == 20000);
  CHECK(j["estimate"].is_number());
  double est = j["estimate"].get<double>();
  double se = j["std_error"].get<double>();
  CHECK(std::abs(est - 13.0 / 64.0) <= 5 * se);

  CHECK(run_cli("omega montecarlo --seeds 0").code == 2);
  CHECK(run_cli("omega montecarlo").code == 2);
  CHECK(run_cli("omega enumerate --max-len 2").code == 2);
  CHECK(run_cli("omega").code == 2);
}

TEST_CASE("ingest extracts comparison bits") {
  fs::path times = work_dir() / "times.txt";
  spit(times, "0\n5\n7\n20\n21\n");
  CliResult r = run_cli("ingest " + times.string() + " --out -");
  CHECK(r.code == 0);
  CHECK(r.out == "00\n");
}

TEST_CASE("ingest rejects bad series with exit 3") {
  fs::path bad = work_dir() / "bad_times.txt";
  spit(bad, "5\n3\n9\n");
  CHECK(run_cli("ingest " + bad.string()).code == 3);
  fs::path two = work_dir() / "two_times.txt";
  spit(two, "1\n2\n");
  CHECK(run_cli("ingest " + two.string()).code == 3);
  fs::path junk = work_dir() / "junk_times.txt";
  spit(junk, "1\ntwo\n3\n");
  CHECK(run_cli("ingest " + junk.string()).code == 3);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("gen --help").code == 0);
}
