#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "randcert/generators.hpp"
#include "randcert/kernels.hpp"
#include "test_helpers.hpp"

using randcert::bernoulli_bits;
using randcert::BitString;
using randcert::champernowne;
using randcert::SourceKind;
using randcert::SourceSpec;

namespace {
constexpr char kConstant34[] = "0100011011000001010011100101110111";
}

TEST_CASE("the enumeration constant, first 34 bits") {
  CHECK(ascii_of(champernowne(34)) == kConstant34);
  CHECK(ascii_of(champernowne(2)) == "01");
  CHECK(champernowne(0).empty());
}

TEST_CASE("the constant is a prefix-closed family") {
  BitString big = champernowne(5000);
  for (uint64_t n : {0u, 1u, 2u, 33u, 34u, 100u, 1023u, 4999u})
    CHECK(champernowne(n) == big.slice(0, n));
}

TEST_CASE("degenerate probabilities pin every bit") {
  CHECK(ascii_of(bernoulli_bits(1.0, 123, 5)) == "11111");
  CHECK(ascii_of(bernoulli_bits(0.0, 77, 3)) == "000");
}

TEST_CASE("out-of-range probabilities are rejected") {
  CHECK_THROWS_AS(bernoulli_bits(-0.1, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_bits(1.5, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli_bits(std::nan(""), 0, 4), std::invalid_argument);
}

TEST_CASE("identical spec, identical bits") {
  CHECK(bernoulli_bits(0.3, 42, 4096) == bernoulli_bits(0.3, 42, 4096));
  CHECK(bernoulli_bits(0.3, 42, 4096) != bernoulli_bits(0.3, 43, 4096));
  CHECK(randcert::prng_bits(9, 1000) == randcert::prng_bits(9, 1000));
}

TEST_CASE("phase is metadata: distinct thetas, identical bits") {
  SourceSpec a{SourceKind::bernoulli, 0.7, 0.0, 5, 2048};
  SourceSpec b{SourceKind::bernoulli, 0.7, 1.5707963, 5, 2048};
  SourceSpec c{SourceKind::bernoulli, 0.7, 3.1415926, 5, 2048};
  CHECK(randcert::generate(a) == randcert::generate(b));
  CHECK(randcert::generate(a) == randcert::generate(c));
}

TEST_CASE("empirical frequency tracks a heavy bias within 4 sigma") {
  const uint64_t len = uint64_t{1} << 20;
  BitString x = bernoulli_bits(0.99, 20260810, len);
  double ones = double(
      randcert::kernels::active_kernels().count_ones(x.words().data(), len));
  double f = ones / double(len);
  double bound = 4.0 * std::sqrt(0.99 * 0.01 / double(len));
  CHECK(std::abs(f - 0.99) <= bound);
}

TEST_CASE("word-packed stream length handling") {
  CHECK(randcert::prng_bits(1, 0).empty());
  CHECK(randcert::prng_bits(1, 65).size() == 65);
  // the shorter stream is a prefix of the longer one for the same seed
  BitString big = randcert::prng_bits(4, 320);
  CHECK(randcert::prng_bits(4, 100) == big.slice(0, 100));
}

TEST_CASE("Born-rule conversion") {
  CHECK(randcert::amplitude_to_p(0.1, std::sqrt(99.0) / 10.0) ==
        doctest::Approx(0.99).epsilon(1e-12));
  CHECK(randcert::amplitude_to_p(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(randcert::amplitude_to_p(1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(randcert::amplitude_to_p(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(randcert::amplitude_to_p(0.6, 0.7), std::invalid_argument);
}

TEST_CASE("source spec single-line form round-trips") {
  SourceSpec spec{SourceKind::bernoulli, 0.99, 0.0, 42, 1048576};
  std::string line = randcert::to_line(spec);
  CHECK(line == "kind=bernoulli p=0.99 seed=42 len=1048576");
  CHECK(randcert::spec_from_line(line) == spec);

  SourceSpec champ{SourceKind::champernowne, 0.5, 0.0, 0, 34};
  CHECK(randcert::spec_from_line(randcert::to_line(champ)) == champ);

  SourceSpec withTheta{SourceKind::bernoulli, 0.5, 1.25, 7, 10};
  CHECK(randcert::spec_from_line(randcert::to_line(withTheta)) == withTheta);

  CHECK(randcert::spec_from_line("kind=prng seed=3 len=8").kind ==
        SourceKind::prng);
  CHECK_THROWS_AS(randcert::spec_from_line("p=0.5 len=4"), randcert::ParseError);
  CHECK_THROWS_AS(randcert::spec_from_line("kind=fairdice len=4"),
                  randcert::ParseError);
  CHECK_THROWS_AS(randcert::spec_from_line("kind=prng bogus=1"),
                  randcert::ParseError);
}
