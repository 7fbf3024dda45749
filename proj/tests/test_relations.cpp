#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "stvb/invariants.hpp"
#include "stvb/relations.hpp"
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

TEST_CASE("relation labels round-trip", "[relations]") {
  for (int r = 0; r < kRelationCount; ++r) {
    RelationId id = static_cast<RelationId>(r);
    std::string label = relation_label(id);
    REQUIRE(relation_from_label(label) == id);
  }
  REQUIRE(relation_label(RelationId::Std13) == "Std13");
  REQUIRE(relation_label(RelationId::Red38) == "Red38");
  REQUIRE(relation_label(RelationId::Exp24) == "Exp24");
  REQUIRE_THROWS_AS(relation_from_label("Std24"), Error);
  REQUIRE(kind_of([] { (void)relation_from_label("nope"); }) == ErrorKind::UnknownToken);
}

TEST_CASE("instantiation matches frozen examples", "[relations]") {
  RelationInstance twist = instantiate(RelationId::Std13, 2, 1);
  REQUIRE(format_word(twist.lhs) == "2; v1 s1 v1");
  REQUIRE(format_word(twist.rhs) == "2; g2 g1 s1 g1 g2");

  RelationInstance invol = instantiate(RelationId::Std3, 4, 2);
  REQUIRE(format_word(invol.lhs) == "4; v2 v2");
  REQUIRE(format_word(invol.rhs) == "4;");

  RelationInstance cancel0 = instantiate(RelationId::Std14, 3, 1, 0);
  REQUIRE(format_word(cancel0.lhs) == "3; s1 S1");
  REQUIRE(format_word(cancel0.rhs) == "3;");
  RelationInstance cancel1 = instantiate(RelationId::Std14, 3, 1, 1);
  REQUIRE(format_word(cancel1.lhs) == "3; S1 s1");

  RelationInstance far = instantiate(RelationId::Std1, 5, 1, 3);
  REQUIRE(format_word(far.lhs) == "5; s1 s3");
  REQUIRE(format_word(far.rhs) == "5; s3 s1");

  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std1, 4, 1, 2); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("standard relation shapes", "[relations]") {
  RelationInstance braid = instantiate(RelationId::Std2, 3, 1);
  REQUIRE(format_word(braid.lhs) == "3; s1 s2 s1");
  REQUIRE(format_word(braid.rhs) == "3; s2 s1 s2");

  RelationInstance mixed = instantiate(RelationId::Std7, 3, 1);
  REQUIRE(format_word(mixed.lhs) == "3; v1 s2 v1");
  REQUIRE(format_word(mixed.rhs) == "3; v2 s1 v2");

  RelationInstance barv = instantiate(RelationId::Std12, 3, 1);
  REQUIRE(format_word(barv.lhs) == "3; g2 v1");
  REQUIRE(format_word(barv.rhs) == "3; v1 g1");

  RelationInstance barbar = instantiate(RelationId::Std9, 4, 2, 4);
  REQUIRE(format_word(barbar.lhs) == "4; g2 g4");
  REQUIRE(format_word(barbar.rhs) == "4; g4 g2");

  RelationInstance singly = instantiate(RelationId::Std17, 3, 2);
  REQUIRE(format_word(singly.lhs) == "3; s2 t2");
  REQUIRE(format_word(singly.rhs) == "3; t2 s2");

  RelationInstance slide = instantiate(RelationId::Std18, 3, 1);
  REQUIRE(format_word(slide.lhs) == "3; s1 s2 t1");
  REQUIRE(format_word(slide.rhs) == "3; t2 s1 s2");

  RelationInstance slide2 = instantiate(RelationId::Std19, 3, 1);
  REQUIRE(format_word(slide2.lhs) == "3; s2 s1 t2");
  REQUIRE(format_word(slide2.rhs) == "3; t1 s2 s1");

  RelationInstance singtwist = instantiate(RelationId::Std23, 2, 1);
  REQUIRE(format_word(singtwist.lhs) == "2; v1 t1 v1");
  REQUIRE(format_word(singtwist.rhs) == "2; g2 g1 t1 g1 g2");
}

TEST_CASE("flip exchanges the two mixed slide relations", "[relations]") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i + 1 <= n - 1; ++i) {
      RelationInstance a = instantiate(RelationId::Std18, n, i);
      RelationInstance b = instantiate(RelationId::Std19, n, n - 1 - i);
      REQUIRE(flip(a.lhs) == b.lhs);
      REQUIRE(flip(a.rhs) == b.rhs);
    }
}

TEST_CASE("expansion schemas match frozen examples", "[relations]") {
  RelationInstance e24 = instantiate(RelationId::Exp24, 3, 2, 0);
  REQUIRE(format_word(e24.lhs) == "3; s2");
  REQUIRE(format_word(e24.rhs) == "3; v1 v2 s1 v2 v1");

  RelationInstance e24n = instantiate(RelationId::Exp24, 3, 2, 1);
  REQUIRE(format_word(e24n.lhs) == "3; S2");
  REQUIRE(format_word(e24n.rhs) == "3; v1 v2 S1 v2 v1");

  RelationInstance e25 = instantiate(RelationId::Exp25, 4, 3);
  REQUIRE(format_word(e25.lhs) == "4; t3");
  REQUIRE(format_word(e25.rhs) == "4; v2 v1 v3 v2 t1 v2 v3 v1 v2");

  RelationInstance e26a = instantiate(RelationId::Exp26, 3, 2);
  REQUIRE(format_word(e26a.lhs) == "3; g2");
  REQUIRE(format_word(e26a.rhs) == "3; v1 g1 v1");

  RelationInstance e26b = instantiate(RelationId::Exp26, 3, 3);
  REQUIRE(format_word(e26b.lhs) == "3; g3");
  REQUIRE(format_word(e26b.rhs) == "3; v2 v1 g1 v1 v2");

  REQUIRE(kind_of([] { (void)instantiate(RelationId::Exp24, 3, 1, 0); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Exp26, 3, 1); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("reduced relation shapes", "[relations]") {
  RelationInstance fix = instantiate(RelationId::Red37, 2);
  REQUIRE(format_word(fix.lhs) == "2; g1 v1 g1 s1 g1 v1 g1");
  REQUIRE(format_word(fix.rhs) == "2; s1");

  RelationInstance fixt = instantiate(RelationId::Red45, 2);
  REQUIRE(format_word(fixt.lhs) == "2; g1 v1 g1 t1 g1 v1 g1");
  REQUIRE(format_word(fixt.rhs) == "2; t1");

  RelationInstance clothed = instantiate(RelationId::Red30, 4);
  REQUIRE(format_word(clothed.lhs) == "4; s1 v2 v3 v1 v2 s1 v2 v1 v3 v2");
  REQUIRE(format_word(clothed.rhs) == "4; v2 v3 v1 v2 s1 v2 v1 v3 v2 s1");

  RelationInstance sleeve = instantiate(RelationId::Red36, 3);
  REQUIRE(format_word(sleeve.lhs) == "3; g1 v1 v2 s1 v2 v1");
  REQUIRE(format_word(sleeve.rhs) == "3; v1 v2 s1 v2 v1 g1");

  RelationInstance braidlike = instantiate(RelationId::Red31, 3);
  REQUIRE(format_word(braidlike.lhs) == "3; v1 s1 v1 v2 s1 v2 v1 s1 v1");
  REQUIRE(format_word(braidlike.rhs) == "3; v2 s1 v2 v1 s1 v1 v2 s1 v2");

  RelationInstance slide = instantiate(RelationId::Red41, 3);
  REQUIRE(format_word(slide.lhs) == "3; t1 v1 v2 s1 v2 v1 s1");
  REQUIRE(format_word(slide.rhs) == "3; v1 v2 s1 v2 v1 s1 v1 v2 t1 v2 v1");

  RelationInstance cancel = instantiate(RelationId::Red38, 2, 1);
  REQUIRE(format_word(cancel.lhs) == "2; S1 s1");
  REQUIRE(format_word(cancel.rhs) == "2;");

  REQUIRE(kind_of([] { (void)instantiate(RelationId::Red30, 3); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Red31, 2); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("auxiliary schemas", "[relations]") {
  RelationInstance tube = instantiate(RelationId::Aux46, 4, 2);
  REQUIRE(format_word(tube.lhs) == "4; v1 v2 v1");
  REQUIRE(format_word(tube.rhs) == "4; v2 v1 v2");

  RelationInstance tube3 = instantiate(RelationId::Aux46, 4, 3);
  REQUIRE(format_word(tube3.lhs) == "4; v1 v2 v3 v2 v1");
  REQUIRE(format_word(tube3.rhs) == "4; v3 v2 v1 v2 v3");

  RelationInstance degen = instantiate(RelationId::Aux46, 3, 1);
  REQUIRE(format_word(degen.lhs) == "3; v1");
  REQUIRE(format_word(degen.rhs) == "3; v1");

  for (int n = 3; n <= 5; ++n)
    for (int i = 2; i <= n - 1; ++i) {
      RelationInstance a = instantiate(RelationId::AuxTauGamma, n, i);
      RelationInstance b = instantiate(RelationId::Std22, n, i, 1);
      REQUIRE(a.lhs == b.lhs);
      REQUIRE(a.rhs == b.rhs);
    }
  REQUIRE(kind_of([] { (void)instantiate(RelationId::AuxTauGamma, 3, 1); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("parameter validation rejects out-of-range instances", "[relations]") {
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std13, 3, 3); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std10, 4, 2, 2); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std10, 4, 2, 3); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std14, 3, 1, 2); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Red38, 2, 2); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std2, 3, 2); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)instantiate(RelationId::Std8, 3, 4); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("every enumerated instance is legal and nontrivial", "[relations]") {
  for (Ruleset rs : {Ruleset::Standard, Ruleset::Reduced, Ruleset::StandardAux})
    for (int n = 2; n <= 5; ++n) {
      std::set<std::string> seen;
      for (const RelationInstance& inst : ruleset_instances(rs, n)) {
        REQUIRE(inst.lhs.degree == n);
        REQUIRE(inst.rhs.degree == n);
        std::string key = std::string(relation_label(inst.rel)) + "/" +
                          std::to_string(inst.i) + "/" + std::to_string(inst.j);
        REQUIRE(seen.insert(key).second);
        REQUIRE_FALSE(inst.lhs == inst.rhs);
      }
    }
}

TEST_CASE("presentation verification passes for the intended rulesets", "[relations]") {
  for (int n = 2; n <= 5; ++n) {
    PresentationReport rep = verify_presentation(Ruleset::Standard, n);
    CAPTURE(n);
    REQUIRE(rep.ok());
    REQUIRE(rep.instances > 0);
  }
  for (int n = 2; n <= 4; ++n) {
    PresentationReport rep = verify_presentation(Ruleset::Reduced, n);
    CAPTURE(n);
    REQUIRE(rep.ok());
  }
  REQUIRE(kind_of([] { (void)verify_presentation(Ruleset::Standard, 1); }) ==
          ErrorKind::IllegalParams);
  REQUIRE(kind_of([] { (void)verify_presentation(Ruleset::StandardAux, 3); }) ==
          ErrorKind::IllegalParams);
}

TEST_CASE("expansion and auxiliary schemas preserve the invariant record", "[relations]") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 2; i <= n - 1; ++i) {
      for (int j = 0; j < 2; ++j) {
        RelationInstance e24 = instantiate(RelationId::Exp24, n, i, j);
        REQUIRE(invariant_record(e24.lhs) == invariant_record(e24.rhs));
      }
      RelationInstance e25 = instantiate(RelationId::Exp25, n, i);
      REQUIRE(invariant_record(e25.lhs) == invariant_record(e25.rhs));
      RelationInstance atg = instantiate(RelationId::AuxTauGamma, n, i);
      REQUIRE(invariant_record(atg.lhs) == invariant_record(atg.rhs));
    }
    for (int i = 2; i <= n; ++i) {
      RelationInstance e26 = instantiate(RelationId::Exp26, n, i);
      REQUIRE(invariant_record(e26.lhs) == invariant_record(e26.rhs));
    }
    for (int i = 1; i <= n - 1; ++i) {
      RelationInstance a46 = instantiate(RelationId::Aux46, n, i);
      REQUIRE(invariant_record(a46.lhs) == invariant_record(a46.rhs));
    }
  }
}

TEST_CASE("ruleset names round-trip", "[relations]") {
  REQUIRE(ruleset_from_string("standard") == Ruleset::Standard);
  REQUIRE(ruleset_from_string("reduced") == Ruleset::Reduced);
  REQUIRE(ruleset_from_string("standard+aux") == Ruleset::StandardAux);
  REQUIRE(ruleset_name(Ruleset::Reduced) == std::string("reduced"));
  REQUIRE(kind_of([] { (void)ruleset_from_string("fancy"); }) == ErrorKind::UnknownToken);
}
