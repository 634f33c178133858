#include <random>

#include "doctest.h"
#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"

using namespace fo3ra;

TEST_CASE("fo3 grammar") {
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("~(forall x. forall y. ~A(x,x) | ~A(y,y))", sig, Mode::Hom);
  CHECK(f->kind == FoKind::Not);
  CHECK(f->lhs->kind == FoKind::Forall);
  CHECK(f->lhs->lhs->kind == FoKind::Forall);
  FoPtr body = f->lhs->lhs->lhs;
  CHECK(body->kind == FoKind::Or);
  CHECK(body->lhs->kind == FoKind::Not);
  CHECK(equal(body->lhs->lhs, fo_atom("A", "x", "x")));

  CHECK(parse_fo3("true", sig, Mode::Hom)->kind == FoKind::Truth);
  CHECK(sig.has_pred("A"));
  CHECK(sig.pred_type("A") == std::make_pair(kUniverse, kUniverse));
}

TEST_CASE("het quantifier sorts") {
  Signature sig;
  sig.add_sort("P");
  FoPtr f = parse_fo3("exists x:P. x = x", sig, Mode::Het);
  CHECK(equal(f, fo_exists("x", "P", fo_equals("x", "x"))));
}

TEST_CASE("quantifier body extends maximally right") {
  Signature sig = Signature::homogeneous();
  FoPtr f = parse_fo3("exists x. a(x,x) & a(x,x)", sig, Mode::Hom);
  CHECK(f->kind == FoKind::Exists);
  CHECK(f->lhs->kind == FoKind::And);
}

TEST_CASE("ra grammar and precedence") {
  Signature sig = Signature::homogeneous();
  RaPtr e = parse_ra("top ; ((A & id) ; top)", sig, Mode::Hom);
  CHECK(e->kind == RaKind::Compose);
  CHECK(e->rhs->kind == RaKind::Compose);
  CHECK(e->rhs->lhs->kind == RaKind::Inter);

  Signature het;
  het.add_sort("P");
  het.add_sort("Q");
  het.add_pred("a", "P", "Q");
  RaPtr conv = parse_ra("a[P,Q]^", het, Mode::Het);
  CHECK(conv->kind == RaKind::Converse);
  CHECK(equal(conv->lhs, ra_atom("a", "P", "Q")));

  RaPtr dag = parse_ra("~id[P] + bot[P,Q]", het, Mode::Het);
  CHECK(dag->kind == RaKind::Dagger);
  CHECK(dag->lhs->kind == RaKind::Complement);
  CHECK(dag->lhs->lhs->kind == RaKind::Id);

  // `;` binds tighter than `&`, left-associative chains
  RaPtr mix = parse_ra("a ; a & a ; a ; a", sig, Mode::Hom);
  CHECK(mix->kind == RaKind::Inter);
  CHECK(mix->rhs->kind == RaKind::Compose);
  CHECK(mix->rhs->lhs->kind == RaKind::Compose);
}

TEST_CASE("signature files") {
  Signature sig = parse_signature("# comment\nsort P\npred A : P -> P\n");
  CHECK(sig.has_sort("P"));
  CHECK(sig.pred_type("A") == std::make_pair(Sort("P"), Sort("P")));

  CHECK_THROWS_AS(parse_signature("pred A : P -> Q\n"), SourceError);
  CHECK_THROWS_AS(parse_signature("sort P\nsort P\n"), SourceError);
}

TEST_CASE("rule patterns") {
  RaPtr p = parse_ra_pattern("(A | B) & B", Mode::Hom);
  CHECK(p->kind == RaKind::Inter);
  CHECK(p->lhs->lhs->meta);
  CHECK(p->lhs->lhs->name == "A");

  RaPtr het = parse_ra_pattern("id[P,P]^", Mode::Het);
  CHECK(het->kind == RaKind::Converse);
  CHECK(het->lhs->kind == RaKind::Id);

  CHECK_THROWS_AS(parse_ra_pattern("A[P,Z]", Mode::Het), SourceError);
  CHECK_THROWS_AS(parse_ra_pattern("abc & B", Mode::Hom), SourceError);
}

TEST_CASE("source errors carry positions") {
  Signature sig = Signature::homogeneous();
  try {
    parse_fo3("exists x. a(x,", sig, Mode::Hom);
    FAIL("expected SourceError");
  } catch (const SourceError& e) {
    CHECK(e.line == 1);
    CHECK(e.column >= 14);
  }
  CHECK_THROWS_AS(parse_ra("a ; ; b", sig, Mode::Hom), SourceError);
}

TEST_CASE("strict parsing runs the checkers") {
  Signature sig = Signature::homogeneous();
  CHECK_THROWS_AS(parse_fo3("a(x,y)", sig, Mode::Hom, /*strict=*/true), TypeError);

  Signature het;
  het.add_sort("P");
  het.add_sort("Q");
  het.add_pred("a", "P", "Q");
  CHECK_THROWS_AS(parse_ra("a[Q,P]", het, Mode::Het, /*strict=*/true), TypeError);
}

namespace {

FoPtr random_fo(std::mt19937_64& rng, int depth) {
  const std::string vars[] = {"x", "y", "z"};
  auto v = [&] { return vars[rng() % 3]; };
  if (depth == 0) {
    switch (rng() % 4) {
      case 0: return fo_atom("a", v(), v());
      case 1: return fo_equals(v(), v());
      case 2: return fo_truth();
      default: return fo_falsehood();
    }
  }
  switch (rng() % 5) {
    case 0: return fo_or(random_fo(rng, depth - 1), random_fo(rng, depth - 1));
    case 1: return fo_and(random_fo(rng, depth - 1), random_fo(rng, depth - 1));
    case 2: return fo_not(random_fo(rng, depth - 1));
    case 3: return fo_exists(v(), kUniverse, random_fo(rng, depth - 1));
    default: return fo_forall(v(), kUniverse, random_fo(rng, depth - 1));
  }
}

RaPtr random_ra(std::mt19937_64& rng, int depth) {
  if (depth == 0) {
    switch (rng() % 4) {
      case 0: return ra_atom("a", kUniverse, kUniverse);
      case 1: return ra_top(kUniverse, kUniverse);
      case 2: return ra_bot(kUniverse, kUniverse);
      default: return ra_id(kUniverse);
    }
  }
  RaPtr l = random_ra(rng, depth - 1);
  switch (rng() % 6) {
    case 0: return ra_union(l, random_ra(rng, depth - 1));
    case 1: return ra_inter(l, random_ra(rng, depth - 1));
    case 2: return ra_compose(l, random_ra(rng, depth - 1));
    case 3: return ra_dagger(l, random_ra(rng, depth - 1));
    case 4: return ra_complement(l);
    default: return ra_converse(l);
  }
}

}  // namespace

TEST_CASE("parse is a left inverse of pretty_print") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Signature sig = Signature::homogeneous();
    FoPtr f = random_fo(rng, 1 + (int)(rng() % 4));
    CHECK(equal(parse_fo3(pretty_print(f), sig, Mode::Hom), f));
    RaPtr e = random_ra(rng, 1 + (int)(rng() % 4));
    CHECK(equal(parse_ra(pretty_print(e), sig, Mode::Hom), e));
  }
}
