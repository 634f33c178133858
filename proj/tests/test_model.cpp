#include <random>

#include "doctest.h"
#include "fo3ra/model.hpp"
#include "fo3ra/parse.hpp"

using namespace fo3ra;

namespace {

FiniteModel hom_model(int n, std::set<std::pair<int, int>> a) {
  FiniteModel m;
  m.carriers = {{kUniverse, n}};
  m.relations["A"] = std::move(a);
  return m;
}

}  // namespace

TEST_CASE("eval_fo3") {
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("exists x. exists y. A(x,x) & A(y,y)", sig, Mode::Hom);
  CHECK(eval_fo3(hom_model(1, {{0, 0}}), f, {}));
  CHECK_FALSE(eval_fo3(hom_model(1, {}), f, {}));
  CHECK(eval_fo3(hom_model(2, {}), parse_fo3("forall x. x = x", sig, Mode::Hom), {}));
  CHECK_THROWS_AS(eval_fo3(hom_model(1, {}), fo_atom("A", "x", "y"), {}), TypeError);
}

TEST_CASE("eval_ra interpretation table") {
  FiniteModel m;
  m.carriers = {{"P", 2}, {"Q", 1}};
  m.relations["a"] = {};
  using Pairs = std::set<std::pair<int, int>>;
  CHECK(eval_ra(m, ra_id("P")) == Pairs{{0, 0}, {1, 1}});
  CHECK(eval_ra(m, ra_complement(ra_bot("P", "Q"))) == Pairs{{0, 0}, {1, 0}});

  FiniteModel u = hom_model(2, {{0, 1}});
  u.relations["B"] = {{1, 0}};
  RaPtr ab = ra_compose(ra_atom("A", kUniverse, kUniverse), ra_atom("B", kUniverse, kUniverse));
  CHECK(eval_ra(u, ab) == Pairs{{0, 0}});

  // dagger as the De Morgan dual of compose
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    FiniteModel w = hom_model(2, {});
    w.relations["B"] = {};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        if (rng() % 2) w.relations["A"].insert({a, b});
        if (rng() % 2) w.relations["B"].insert({a, b});
      }
    RaPtr l = ra_atom("A", kUniverse, kUniverse), r = ra_atom("B", kUniverse, kUniverse);
    CHECK(eval_ra(w, ra_dagger(l, r)) ==
          eval_ra(w, ra_complement(ra_compose(ra_complement(l), ra_complement(r)))));
  }
}

TEST_CASE("ra_holds") {
  FiniteModel m;
  m.carriers = {{"P", 2}, {"Q", 2}};
  CHECK(ra_holds(m, ra_top("P", "Q")));
  CHECK_FALSE(ra_holds(m, ra_bot("P", "Q")));
}

TEST_CASE("model enumeration counts") {
  Signature sig = Signature::homogeneous();
  sig.add_pred("A", kUniverse, kUniverse);
  CHECK(count_models(sig, 1) == 2);
  CHECK(count_models(sig, 2) == 18);

  Signature empty = Signature::homogeneous();
  CHECK(count_models(empty, 1) == 1);

  int seen = 0;
  enumerate_models(sig, 2, [&](const FiniteModel&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("check_equiv_fo3 verdicts") {
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("exists x. A(x,x)", sig, Mode::Hom);
  CHECK(check_equiv_fo3(f, f, sig).valid);

  Verdict v = check_equiv_fo3(f, parse_fo3("true", sig, Mode::Hom), sig);
  REQUIRE_FALSE(v.valid);
  REQUIRE(v.counterexample.has_value());
  // the stored model really distinguishes the two formulas
  CHECK(eval_fo3(*v.counterexample, f, {}) != true);
}

TEST_CASE("check_equiv_ra verdicts") {
  RaPtr a = ra_atom("A", kUniverse, kUniverse, true);
  RaPtr b = ra_atom("B", kUniverse, kUniverse, true);
  CHECK(check_equiv_ra(ra_union(a, a), a).valid);
  CHECK(check_equiv_ra(ra_inter(a, ra_complement(a)), ra_bot(kUniverse, kUniverse)).valid);

  Verdict v = check_equiv_ra(ra_union(a, b), a);
  REQUIRE_FALSE(v.valid);
  REQUIRE(v.counterexample.has_value());
  CHECK(eval_ra(*v.counterexample, ra_union(a, b)) != eval_ra(*v.counterexample, a));

  CHECK_THROWS_AS(check_equiv_ra(ra_id("P"), ra_id("Q")), TypeError);
}

TEST_CASE("oracle determinism") {
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("forall x. exists y. A(x,y)", sig, Mode::Hom);
  FoPtr g = parse_fo3("forall x. exists y. A(y,x)", sig, Mode::Hom);
  OracleBudget b;
  b.seed = 9;
  Verdict v1 = check_equiv_fo3(f, g, sig, b);
  Verdict v2 = check_equiv_fo3(f, g, sig, b);
  REQUIRE_FALSE(v1.valid);
  CHECK(v1.counterexample->to_text() == v2.counterexample->to_text());
}

TEST_CASE("model text serialization") {
  FiniteModel m;
  m.carriers = {{"P", 2}};
  m.relations["A"] = {{0, 1}, {1, 1}};
  std::string t = m.to_text();
  CHECK(t.find("sort P = {0,1}") != std::string::npos);
  CHECK(t.find("rel A = {(0,1),(1,1)}") != std::string::npos);
}

TEST_CASE("verdicts are bound-qualified") {
  // the two formulas agree on 1-element models and differ from card 2 on
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("forall x. forall y. A(x,y) | A(y,x)", sig, Mode::Hom);
  FoPtr g = parse_fo3("forall x. A(x,x)", sig, Mode::Hom);

  Verdict shallow = check_equiv_fo3(f, g, sig, OracleBudget::stage1_only(1));
  CHECK(shallow.valid);
  CHECK(shallow.bound == 1);

  Verdict deep = check_equiv_fo3(f, g, sig);
  REQUIRE_FALSE(deep.valid);
  CHECK(eval_fo3(*deep.counterexample, f, {}) != eval_fo3(*deep.counterexample, g, {}));
}
