#include "doctest.h"

#include "fo3ra/ast.hpp"
#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"

using namespace fo3ra;

namespace {
Signature het_sig() {
  Signature sig;
  sig.add_sort("P");
  sig.add_sort("Q");
  sig.add_sort("R");
  sig.add_pred("a", "P", "Q");
  sig.add_pred("b", "Q", "R");
  return sig;
}
}  // namespace

TEST_CASE("type_of follows the overloaded d") {
  CHECK(type_of(ra_id("P")) == std::make_pair(Sort("P"), Sort("P")));
  CHECK(type_of(ra_converse(ra_atom("a", "P", "Q"))) == std::make_pair(Sort("Q"), Sort("P")));
  CHECK(type_of(ra_compose(ra_atom("a", "P", "Q"), ra_atom("b", "Q", "R"))) ==
        std::make_pair(Sort("P"), Sort("R")));
  CHECK(type_of(ra_dagger(ra_atom("a", "P", "Q"), ra_atom("b", "Q", "R"))) ==
        std::make_pair(Sort("P"), Sort("R")));
  CHECK(type_of(ra_complement(ra_top("P", "Q"))) == std::make_pair(Sort("P"), Sort("Q")));
}

TEST_CASE("converse twice restores the type and the term round-trips") {
  RaPtr e = ra_compose(ra_atom("a", "P", "Q"), ra_atom("b", "Q", "R"));
  RaPtr cc = ra_converse(ra_converse(e));
  CHECK(type_of(cc) == type_of(e));
  CHECK(equal(cc->lhs->lhs, e));
}

TEST_CASE("check_well_typed_ra conditions") {
  Signature sig = het_sig();
  CHECK(check_well_typed_ra(ra_atom("a", "P", "Q"), sig).empty());

  auto v1 = check_well_typed_ra(ra_atom("a", "Q", "P"), sig);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].condition == 1);

  auto v2 = check_well_typed_ra(ra_union(ra_atom("a", "P", "Q"), ra_atom("b", "Q", "R")), sig);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].condition == 2);

  // (a[P,Q]) ; (b'[P,Q]) with d2(lhs)=Q != d1(rhs)=P
  Signature sig2;
  sig2.add_sort("P");
  sig2.add_sort("Q");
  sig2.add_pred("a", "P", "Q");
  sig2.add_pred("c", "P", "Q");
  auto v3 = check_well_typed_ra(ra_compose(ra_atom("a", "P", "Q"), ra_atom("c", "P", "Q")), sig2);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].condition == 3);
}

TEST_CASE("check_closed_and_typed_fo3") {
  Signature sig = het_sig();
  FoPtr ok = fo_exists("x", "P", fo_exists("y", "Q", fo_atom("a", "x", "y")));
  CHECK(check_closed_and_typed_fo3(ok, sig).empty());

  auto unbound = check_closed_and_typed_fo3(fo_atom("a", "x", "y"), sig);
  CHECK(unbound.size() == 2);
  CHECK(unbound[0].condition == 0);

  FoPtr flipped = fo_exists("x", "Q", fo_exists("y", "P", fo_atom("a", "x", "y")));
  auto vs = check_closed_and_typed_fo3(flipped, sig);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].condition == 1);
}

TEST_CASE("shadowing is allowed, inner binding wins") {
  Signature sig = het_sig();
  // outer x:Q is shadowed by inner x:P before use
  FoPtr f = fo_exists("x", "Q", fo_exists("x", "P", fo_exists("y", "Q", fo_atom("a", "x", "y"))));
  CHECK(check_closed_and_typed_fo3(f, sig).empty());
}

TEST_CASE("size counts AST nodes") {
  CHECK(size(ra_atom("a", "P", "Q")) == 1);
  RaPtr pat = parse_ra_pattern("(A | B) & B", Mode::Hom);
  CHECK(size(pat) == 5);
  FoPtr f = fo_exists("x", kUniverse, fo_atom("a", "x", "x"));
  CHECK(size(f) == 2);
}

TEST_CASE("size strictly decreases into children") {
  RaPtr e = parse_ra_pattern("~(A ; B^) + (top & id)", Mode::Hom);
  std::vector<RaPtr> stack{e};
  while (!stack.empty()) {
    RaPtr n = stack.back();
    stack.pop_back();
    for (const RaPtr& c : {n->lhs, n->rhs}) {
      if (!c) continue;
      CHECK(size(c) < size(n));
      stack.push_back(c);
    }
  }
  CHECK(size(e) >= 1);
}

TEST_CASE("pretty printing uses minimal parentheses") {
  Signature sig = Signature::homogeneous();
  RaPtr u = parse_ra("a | a", sig, Mode::Hom);
  CHECK(pretty_print(u) == "a | a");
  RaPtr c = ra_compose(ra_top(kUniverse, kUniverse),
                       ra_inter(ra_atom("a", kUniverse, kUniverse), ra_id(kUniverse)));
  CHECK(pretty_print(c) == "top ; (a & id)");
  CHECK(pretty_print(fo_not(fo_atom("a", "x", "y"))) == "~a(x,y)");
}
