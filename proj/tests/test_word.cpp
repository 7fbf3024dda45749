#include <catch2/catch_amalgamated.hpp>

#include "stvb/word.hpp"
#include "test_util.hpp"

using namespace stvb;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an stvb::Error");
  return ErrorKind::UnknownToken;
}
}  // namespace

TEST_CASE("parse and format round-trip canonically", "[word]") {
  CHECK(format_word(parse_word("3; s1 v2 g3")) == "3; s1 v2 g3");
  CHECK(format_word(parse_word("  3 ;  s1   v2 ")) == "3; s1 v2");
  CHECK(format_word(parse_word("3;")) == "3;");
  CHECK(format_word(parse_word("12; S11 t3")) == "12; S11 t3");
  CHECK(parse_word("3;").letters.empty());
  CHECK(parse_word("3;").degree == 3);
}

TEST_CASE("parse rejects malformed input with typed errors", "[word]") {
  CHECK(kind_of([] { parse_word("s1 v2"); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_word("; s1"); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_word("0;"); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_word("3"); }) == ErrorKind::MalformedHeader);
  CHECK(kind_of([] { parse_word("2; x1"); }) == ErrorKind::UnknownToken);
  CHECK(kind_of([] { parse_word("2; s"); }) == ErrorKind::UnknownToken);
  CHECK(kind_of([] { parse_word("2; s1v1"); }) == ErrorKind::UnknownToken);
  CHECK(kind_of([] { parse_word("2; t2"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_word("2; g3"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_word("2; s0"); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_word("1; v1"); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("bars reach index n, crossings stop at n-1", "[word]") {
  CHECK_NOTHROW(parse_word("2; g2"));
  CHECK_NOTHROW(parse_word("1; g1"));
  CHECK(max_index(Kind::Bar, 4) == 4);
  CHECK(max_index(Kind::Virtual, 4) == 3);
}

TEST_CASE("compose concatenates and checks degree", "[word]") {
  BraidWord a = parse_word("3; s1");
  BraidWord b = parse_word("3; v2");
  CHECK(format_word(compose(a, b)) == "3; s1 v2");
  CHECK(kind_of([&] { compose(a, parse_word("4; v2")); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("invert reverses and swaps crossing signs", "[word]") {
  CHECK(format_word(invert(parse_word("2; s1 v1"))) == "2; v1 S1");
  CHECK(format_word(invert(parse_word("3; S2 g1 v1"))) == "3; v1 g1 s2");
  CHECK(kind_of([] { invert(parse_word("2; t1")); }) == ErrorKind::NotInvertible);
  std::mt19937 rng(7101);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = stvb_test::random_word(rng, 4, 10);
    bool singular = false;
    for (Generator g : w.letters) singular |= g.kind == Kind::Singular;
    if (singular) continue;
    CHECK(invert(invert(w)) == w);
  }
}

TEST_CASE("iota embeds below or above", "[word]") {
  CHECK(format_word(iota(parse_word("2; s1"), 0, 1)) == "3; s1");
  CHECK(format_word(iota(parse_word("2; s1"), 1, 0)) == "3; s2");
  CHECK(format_word(iota(parse_word("2; g2 t1"), 2, 1)) == "5; g4 t3");
  CHECK(kind_of([] { iota(parse_word("2;"), -1, 0); }) == ErrorKind::IllegalParams);
}

TEST_CASE("flip mirrors indices and is an involution", "[word]") {
  CHECK(format_word(flip(parse_word("3; s1 v2 g1"))) == "3; s2 v1 g3");
  CHECK(format_word(flip(parse_word("4; t3 g4 S1"))) == "4; t1 g1 S3");
  std::mt19937 rng(7102);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = stvb_test::random_word(rng, 5, 12);
    CHECK(flip(flip(w)) == w);
  }
}

TEST_CASE("conjugate builds a w a^{-1}", "[word]") {
  BraidWord a = parse_word("3; v1");
  BraidWord w = parse_word("3; s2");
  CHECK(format_word(conjugate(a, w)) == "3; v1 s2 v1");
}
