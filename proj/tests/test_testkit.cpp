#include <sstream>

#include "doctest.h"
#include "fo3ra/backtranslate.hpp"
#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"
#include "fo3ra/testkit.hpp"

using namespace fo3ra;

TEST_CASE("random_fo3 generates closed well-typed formulas") {
  FuzzConfig cfg;
  cfg.target_size = 10;
  for (int i = 0; i < 500; ++i) {
    FoPtr f = random_fo3(cfg, i);
    CHECK(size(f) == 10);
    CHECK(check_closed_and_typed_fo3(f, cfg.sig).empty());
    CHECK(var_names(f).size() <= 3);
  }

  FuzzConfig het;
  het.mode = Mode::Het;
  het.sig = default_signature(Mode::Het);
  het.target_size = 9;
  for (int i = 0; i < 200; ++i) {
    FoPtr f = random_fo3(het, i);
    CHECK(check_closed_and_typed_fo3(f, het.sig).empty());
  }
}

TEST_CASE("random_fo3 is deterministic") {
  FuzzConfig cfg;
  cfg.seed = 42;
  CHECK(equal(random_fo3(cfg, 7), random_fo3(cfg, 7)));
  // different indices give different draws somewhere in a small window
  bool differs = false;
  for (int i = 0; i < 10 && !differs; ++i)
    differs = !equal(random_fo3(cfg, i), random_fo3(cfg, i + 1));
  CHECK(differs);
}

TEST_CASE("config invariants") {
  FuzzConfig bad;
  bad.count = 0;
  CHECK_THROWS_AS(fuzz(bad), TypeError);
  FuzzConfig tiny;
  tiny.target_size = 1;
  CHECK_THROWS_AS(random_fo3(tiny, 0), TypeError);
}

TEST_CASE("round_trip validates the worked examples") {
  FuzzConfig cfg;
  Signature sig = Signature::homogeneous();
  FoPtr hom = parse_fo3("~(forall x. forall y. ~A(x,x) | ~A(y,y))", sig, Mode::Hom);
  cfg.sig = sig;
  RoundTripReport r = round_trip(hom, cfg);
  CHECK(r.valid);
  CHECK(r.stage.empty());
  CHECK(r.raw_size >= r.simplified_size);

  FuzzConfig het;
  het.mode = Mode::Het;
  Signature hs;
  for (const char* t : {"P", "Q", "R", "Left", "Right"}) hs.add_sort(t);
  hs.add_pred("A", "P", "R");
  hs.add_pred("B", "R", "P");
  hs.add_pred("C", "P", "Q");
  het.sig = hs;
  FoPtr hf = parse_fo3("forall x:P. forall y:Q. exists z:R. ~(A(x,z) & B(z,x)) & C(x,y)", hs,
                       Mode::Het);
  CHECK(round_trip(hf, het).valid);
}

TEST_CASE("a corrupted translation is caught") {
  // drop a complement from the back-translation target by checking a mangled
  // formula against a correct one through the oracle path
  FuzzConfig cfg;
  Signature sig = Signature::homogeneous();
  FoPtr good = parse_fo3("forall x. forall y. ~A(x,y)", sig, Mode::Hom);
  FoPtr bad = parse_fo3("forall x. forall y. A(x,y)", sig, Mode::Hom);
  cfg.sig = sig;
  RoundTripReport r = round_trip(good, cfg);
  REQUIRE(r.valid);
  Verdict v = check_equiv_fo3(bad, close(r.trace.simplified), sig, cfg.budget);
  REQUIRE_FALSE(v.valid);
  CHECK(v.counterexample.has_value());
}

TEST_CASE("fuzz summary") {
  FuzzConfig cfg;
  cfg.count = 25;
  cfg.target_size = 8;
  cfg.seed = 3;
  cfg.rules = parse_rules("A | A => A\n(A | B) & B => B\n~A | A => top\n", Mode::Hom);
  FuzzSummary s = fuzz(cfg);
  CHECK(s.passed == 25);
  CHECK(s.failed == 0);
  CHECK(s.ok());

  FuzzSummary again = fuzz(cfg);
  CHECK(again.passed == s.passed);

  // simplification does not change verdicts
  FuzzConfig plain = cfg;
  plain.simplify = false;
  FuzzSummary raw = fuzz(plain);
  CHECK(raw.passed == s.passed);
}

TEST_CASE("render_failure replay artifact") {
  FuzzConfig cfg;
  FoPtr f = random_fo3(cfg, 0);
  RoundTripReport r;
  r.stage = "oracle";
  r.error = "counterexample found";
  FiniteModel m;
  m.carriers = {{kUniverse, 1}};
  m.relations["a"] = {};
  r.counterexample = m;
  std::string text = render_failure(0, f, r);
  CHECK(text.find("case 0 FAILED at stage oracle") != std::string::npos);
  CHECK(text.find(pretty_print(f)) != std::string::npos);
  CHECK(text.find("sort U = {0}") != std::string::npos);
}
