#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "fo3ra/model.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"
#include "fo3ra/simplify.hpp"

using namespace fo3ra;

namespace {

RaPtr pat(const std::string& s, Mode m = Mode::Hom) { return parse_ra_pattern(s, m); }

RaPtr hom(const std::string& s) {
  Signature sig = Signature::homogeneous();
  return parse_ra(s, sig, Mode::Hom);
}

RuleSet table1() {
  return parse_rules(
      "A | A => A\n"
      "id^ => id\n"
      "(A | B) | B => B | A\n"
      "~A | A => top\n"
      "A^^ => A\n"
      "A & ~A => bot\n"
      "(A | B) & B => B\n",
      Mode::Hom);
}

}  // namespace

TEST_CASE("match and instantiate") {
  Subst s;
  CHECK(match(pat("(A | B) & B"), hom("(a | b ; c) & (b ; c)"), s));
  CHECK(equal(s.vars.at("A"), hom("a")));
  CHECK(equal(s.vars.at("B"), hom("b ; c")));
  CHECK(equal(instantiate(pat("B | A"), s), hom("(b ; c) | a")));

  // nonlinear occurrences must bind identically
  Subst s2;
  CHECK_FALSE(match(pat("A | A"), hom("a | b"), s2));
  Subst s3;
  CHECK(match(pat("A | A"), hom("(a ; b) | (a ; b)"), s3));

  // sort variables
  Signature sig;
  sig.add_sort("S1");
  sig.add_sort("S2");
  sig.add_pred("a", "S1", "S2");
  Subst s4;
  CHECK(match(pat("A[P,Q] | A[P,Q]", Mode::Het),
              parse_ra("a[S1,S2] | a[S1,S2]", sig, Mode::Het), s4));
  CHECK(s4.sorts.at("P") == "S1");
  CHECK(s4.sorts.at("Q") == "S2");
  Subst s5;
  CHECK_FALSE(match(pat("A[P,P]", Mode::Het), parse_ra("a[S1,S2]", sig, Mode::Het), s5));
}

TEST_CASE("rule_violation") {
  auto rule = [](const char* l, const char* r, Mode m = Mode::Hom) {
    return RewriteRule{std::string(l) + " => " + r, pat(l, m), pat(r, m), m};
  };
  CHECK_FALSE(rule_violation(rule("A | A", "A")));
  CHECK(rule_violation(rule("A", "A | A")));          // size increasing
  CHECK(rule_violation(rule("A | B", "A & A")));      // multiplicity
  CHECK(rule_violation(rule("A | B", "C")));          // rhs metavar not in lhs
  CHECK(rule_violation(rule("A[P,Q] ; B[Q,P]", "A[P,Q]", Mode::Het)));  // type change
}

TEST_CASE("matcher equals the naive scan") {
  RuleSet rules = table1();
  Matcher m(rules);
  std::mt19937_64 rng(13);
  auto rand_term = [&](auto&& self, int d) -> RaPtr {
    if (d == 0) {
      switch (rng() % 4) {
        case 0: return hom("a");
        case 1: return hom("b");
        case 2: return hom("id");
        default: return hom("top");
      }
    }
    switch (rng() % 6) {
      case 0: return ra_union(self(self, d - 1), self(self, d - 1));
      case 1: return ra_inter(self(self, d - 1), self(self, d - 1));
      case 2: return ra_compose(self(self, d - 1), self(self, d - 1));
      case 3: return ra_dagger(self(self, d - 1), self(self, d - 1));
      case 4: return ra_complement(self(self, d - 1));
      default: return ra_converse(self(self, d - 1));
    }
  };
  for (int i = 0; i < 500; ++i) {
    RaPtr e = rand_term(rand_term, 1 + (int)(rng() % 3));
    auto got = m.match_root(e);
    auto want = match_root_naive(e, rules);
    CHECK(got.has_value() == want.has_value());
    if (got && want) {
      CHECK(got->second->name == want->second->name);
      CHECK(equal(got->first, want->first));
    }
  }
}

TEST_CASE("rewrite_once picks the shallowest leftmost site") {
  Matcher m(parse_rules("A | A => A\n", Mode::Hom));
  auto step = rewrite_once(hom("((a | a) ; b) & ((c | c) ; b)"), m);
  REQUIRE(step);
  CHECK(pretty_print(step->first) == "a ; b & (c | c) ; b");

  auto root = rewrite_once(hom("(a ; b) | (a ; b)"), m);
  REQUIRE(root);
  CHECK(pretty_print(root->first) == "a ; b");

  CHECK_FALSE(rewrite_once(hom("a ; b"), m));
}

TEST_CASE("simplify_full reaches a fixpoint") {
  Matcher m(table1());
  auto [e, steps] = simplify_full(hom("((a | b) & b) | ((a | b) & b)"), m);
  CHECK(pretty_print(e) == "b");
  CHECK(steps.size() == 2);
  CHECK_FALSE(rewrite_once(e, m));
}

TEST_CASE("simplification preserves semantics and size bound") {
  Matcher m(table1());
  std::mt19937_64 rng(17);
  auto rand_term = [&](auto&& self, int n) -> RaPtr {
    if (n <= 1) {
      switch (rng() % 4) {
        case 0: return hom("a");
        case 1: return hom("b");
        case 2: return hom("id");
        default: return hom("bot");
      }
    }
    switch (rng() % 3) {
      case 0: return ra_complement(self(self, n - 1));
      case 1: return ra_converse(self(self, n - 1));
      default: {
        int l = 1 + (int)(rng() % (size_t)std::max(1, n - 2));
        RaPtr a = self(self, std::min(l, n - 2)), b = self(self, std::max(1, n - 1 - l));
        switch (rng() % 4) {
          case 0: return ra_union(a, b);
          case 1: return ra_inter(a, b);
          case 2: return ra_compose(a, b);
          default: return ra_dagger(a, b);
        }
      }
    }
  };
  for (int i = 0; i < 200; ++i) {
    RaPtr e = rand_term(rand_term, 2 + (int)(rng() % 7));
    auto [out, steps] = simplify_full(e, m);
    CHECK(size(out) <= size(e));
    CHECK((int)steps.size() < size(e));
    CHECK(type_of(out) == type_of(e));
    CHECK(check_equiv_ra(e, out, OracleBudget::stage1_only(2)).valid);
  }
}

TEST_CASE("rule files round-trip") {
  RuleSet rules = table1();
  std::string text = render_rules(rules);
  RuleSet back = parse_rules(text, Mode::Hom);
  REQUIRE(back.rules.size() == rules.rules.size());
  for (size_t i = 0; i < rules.rules.size(); ++i) {
    CHECK(equal(back.rules[i].lhs, rules.rules[i].lhs));
    CHECK(equal(back.rules[i].rhs, rules.rules[i].rhs));
  }

  auto path = std::filesystem::temp_directory_path() / "fo3ra_rules_test.rules";
  save_rules(rules, path.string());
  RuleSet loaded = load_rules(path.string(), Mode::Hom);
  CHECK(render_rules(loaded) == text);
  std::filesystem::remove(path);
}

TEST_CASE("invalid rule files are rejected with a line number") {
  try {
    parse_rules("A | A => A\nA => A | A\n", Mode::Hom);
    FAIL("expected SourceError");
  } catch (const SourceError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_rules("A | A\n", Mode::Hom), SourceError);
}

TEST_CASE("het rules rewrite only matching typings") {
  RuleSet rules = parse_rules("A[P,Q] | A[P,Q] => A[P,Q]\n", Mode::Het);
  Signature sig;
  sig.add_sort("S1");
  sig.add_sort("S2");
  sig.add_pred("a", "S1", "S2");
  Matcher m(rules);
  CHECK(pretty_print(simplify_full(parse_ra("a[S1,S2] | a[S1,S2]", sig, Mode::Het), m).first) ==
        "a[S1,S2]");
}
