#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "stvb/reduced.hpp"
#include "stvb/rewrite.hpp"
#include "stvb/search.hpp"
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

std::string read_fixture(const std::string& name) {
  std::string path = std::string(STVB_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DerivationResult replay_fixture(const std::string& name) {
  Derivation d = parse_derivation(read_fixture(name));
  return check_derivation(d.start, d.steps);
}

}  // namespace

TEST_CASE("generator expansion lowers indices to one", "[reduced]") {
  CHECK(format_word(expand_generator({Kind::SigmaPos, 2}, 3).word) ==
        "3; v1 v2 s1 v2 v1");
  CHECK(format_word(expand_generator({Kind::SigmaNeg, 2}, 3).word) ==
        "3; v1 v2 S1 v2 v1");
  CHECK(format_word(expand_generator({Kind::Bar, 2}, 3).word) == "3; v1 g1 v1");
  CHECK(format_word(expand_generator({Kind::Bar, 3}, 3).word) == "3; v2 v1 g1 v1 v2");
  CHECK(format_word(expand_generator({Kind::Singular, 1}, 2).word) == "2; t1");
  CHECK(format_word(expand_generator({Kind::Virtual, 2}, 3).word) == "3; v2");
  REQUIRE(kind_of([] { (void)expand_generator({Kind::SigmaPos, 3}, 3); }) ==
          ErrorKind::IllegalGenerator);
}

TEST_CASE("negative expansion is the letterwise inverse of the positive one",
          "[reduced]") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 2; i <= n - 1; ++i) {
      BraidWord pos = expand_generator({Kind::SigmaPos, i}, n).word;
      BraidWord neg = expand_generator({Kind::SigmaNeg, i}, n).word;
      CHECK(invert(pos) == neg);
    }
}

TEST_CASE("word reduction expands letterwise and keeps the record", "[reduced]") {
  CHECK(format_word(reduce_word(parse_word("3; s2")).word) == "3; v1 v2 s1 v2 v1");
  CHECK(format_word(reduce_word(parse_word("3; v1 v2")).word) == "3; v1 v2");
  CHECK(format_word(reduce_word(parse_word("3; g3")).word) == "3; v2 v1 g1 v1 v2");
  CHECK(format_word(reduce_word(parse_word("4; t2 g1")).word) ==
        "4; v1 v2 t1 v2 v1 g1");

  std::mt19937 rng(414);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = stvb_test::random_word(rng, 5, 10);
    ReducedWord r = reduce_word(w);
    for (Generator g : r.word.letters) CHECK(is_reduced_letter(g));
    CHECK(invariant_record(r.word) == invariant_record(w));
    CHECK(as_reduced(r.word).word == r.word);
  }
  REQUIRE(kind_of([] { (void)as_reduced(parse_word("3; s2")); }) ==
          ErrorKind::IllegalGenerator);
}

TEST_CASE("star element layout", "[reduced]") {
  CHECK(format_word(star_element(1)) == "1; g1");
  CHECK(format_word(star_element(2)) == "2; v1 g1 g2");
  CHECK(format_word(star_element(3)) == "3; v1 v2 v1 g1 g2 g3");
  CHECK(format_word(star_element(4)) == "4; v1 v2 v1 v3 v2 v1 g1 g2 g3 g4");
  for (int n = 1; n <= 5; ++n) {
    BraidWord b = star_element(n);
    BraidWord rev = b;
    std::reverse(rev.letters.begin(), rev.letters.end());
    CHECK(invert(b) == rev);  // every letter of b* is self-inverse
  }
}

TEST_CASE("star conjugation matches the flip automorphism on generators",
          "[reduced]") {
  BraidWord id2 = make_word(2, {});
  EquivalenceResult fixed =
      equivalent(conjugate_by_star(id2), id2, Ruleset::Standard, 8, 100000);
  REQUIRE(fixed.outcome == Outcome::Equivalent);

  for (const char* text : {"3; s1", "3; v2", "3; t1", "3; g2"}) {
    BraidWord g = parse_word(text);
    EquivalenceResult r = equivalent(conjugate_by_star(g), flip(g), Ruleset::Standard,
                                     18, 1000000);
    CAPTURE(text);
    REQUIRE(r.outcome == Outcome::Equivalent);
    DerivationResult replay = check_derivation(conjugate_by_star(g), r.trace);
    REQUIRE(replay.valid);
    REQUIRE(replay.final_word == flip(g));
  }

  std::mt19937 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = stvb_test::random_word(rng, 4, 8);
    InvariantRecord a = invariant_record(conjugate_by_star(w));
    InvariantRecord b = invariant_record(w);
    CHECK(a.tau_count == b.tau_count);
    CHECK(a.sigma_exp == b.sigma_exp);
  }
}

TEST_CASE("flip sends relation instances to equivalent pairs", "[reduced]") {
  for (int n = 2; n <= 5; ++n)
    for (const RelationInstance& inst : ruleset_instances(Ruleset::Standard, n)) {
      BraidWord fl = flip(inst.lhs);
      BraidWord fr = flip(inst.rhs);
      REQUIRE(invariant_record(fl) == invariant_record(fr));
      int cap = static_cast<int>(std::max(fl.letters.size(), fr.letters.size())) + 2;
      EquivalenceResult r = equivalent(fl, fr, Ruleset::Standard, cap, 300000);
      CAPTURE(n, relation_label(inst.rel), inst.i, inst.j);
      REQUIRE(r.outcome == Outcome::Equivalent);
    }
}

TEST_CASE("shipped derivation fixtures replay to their stated finals", "[reduced]") {
  DerivationResult expand = replay_fixture("tau_gamma_distant_expand.deriv");
  REQUIRE(expand.valid);
  REQUIRE(format_word(expand.final_word) == "4; g1 t3");

  DerivationResult direct = replay_fixture("tau_gamma_distant_direct.deriv");
  REQUIRE(direct.valid);
  REQUIRE(format_word(direct.final_word) == "4; g1 t3");

  DerivationResult reverse = replay_fixture("tau_gamma_distant_reverse.deriv");
  REQUIRE(reverse.valid);
  REQUIRE(format_word(reverse.final_word) == "4; g3 t1");

  DerivationResult detour = replay_fixture("twisted_singular_detour.deriv");
  REQUIRE(detour.valid);
  REQUIRE(format_word(detour.final_word) == "3; v1 t1 v1");
}

TEST_CASE("sigma-inverse star conjugation fixture replays with peak nineteen",
          "[reduced]") {
  Derivation d = parse_derivation(read_fixture("star_conjugate_sigma_inverse.deriv"));
  REQUIRE(d.start == conjugate_by_star(parse_word("3; S1")));
  BraidWord w = d.start;
  std::size_t peak = w.letters.size();
  for (const RewriteStep& st : d.steps) {
    w = apply(w, st);
    peak = std::max(peak, w.letters.size());
  }
  REQUIRE(format_word(w) == "3; S2");
  REQUIRE(w == flip(parse_word("3; S1")));
  REQUIRE(peak == 19);

  // Inverse coherence: conjugation commutes with the pair cancellation.
  BraidWord both = compose(conjugate_by_star(parse_word("3; s1")),
                           conjugate_by_star(parse_word("3; S1")));
  EquivalenceResult r =
      equivalent(both, make_word(3, {}), Ruleset::Standard, 28, 1000000);
  REQUIRE(r.outcome == Outcome::Equivalent);
}
