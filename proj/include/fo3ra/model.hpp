#ifndef FO3RA_MODEL_HPP
#define FO3RA_MODEL_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fo3ra/ast.hpp"

namespace fo3ra {

// Finite interpretation: non-empty carriers {0..k-1} per sort and one relation
// table per predicate, subject to relations[a] <= carrier(d1(a)) x carrier(d2(a)).
struct FiniteModel {
  std::vector<std::pair<Sort, int>> carriers;  // sort -> cardinality
  std::map<std::string, std::set<std::pair<int, int>>> relations;

  int card(const Sort& s) const;
  std::string to_text() const;  // `sort P = {0,1}` / `rel A = {(0,1),(1,1)}` lines
};

// Staged finite-model search budget. Stage 1 is exhaustive up to
// exhaustive_max_card; stage 2 covers cardinality stage2_card exhaustively when
// the total relation-assignment count stays under stage2_exhaustive_limit and
// falls back to seeded random sampling at cards [sample_min_card, sample_max_card]
// otherwise.
struct OracleBudget {
  int exhaustive_max_card = 2;
  bool stage2 = true;
  int stage2_card = 3;
  unsigned long long stage2_exhaustive_limit = 1ull << 24;
  int samples = 20000;
  int sample_min_card = 3;
  int sample_max_card = 4;
  unsigned long long seed = 0;

  static OracleBudget stage1_only(int max_card = 2) {
    OracleBudget b;
    b.exhaustive_max_card = max_card;
    b.stage2 = false;
    return b;
  }
};

struct Verdict {
  bool valid;
  int bound = 0;        // largest cardinality covered exhaustively
  bool sampled = false; // true when stage 2 fell back to sampling
  std::optional<FiniteModel> counterexample;
};

// Tarskian truth value; quantifiers range over the carrier of their sort.
// Throws TypeError on a variable missing from env.
bool eval_fo3(const FiniteModel& m, const FoPtr& f, const std::map<std::string, int>& env);

// The eleven-case interpretation of RA terms. Complement is relative to the
// carrier product of the term's type; Dagger's middle variable ranges over the
// carrier of d2(lhs).
std::set<std::pair<int, int>> eval_ra(const FiniteModel& m, const RaPtr& e);

// True iff e denotes the full relation on its type.
bool ra_holds(const FiniteModel& m, const RaPtr& e);

// Every model over sig with carrier cardinalities in [1, max_card], elements
// canonically named 0..k-1, in a fixed deterministic order. fn returning false
// stops the stream.
void enumerate_models(const Signature& sig, int max_card,
                      const std::function<bool(const FiniteModel&)>& fn);
unsigned long long count_models(const Signature& sig, int max_card);

// Both formulas closed and well-typed under sig. Deterministic given budget.
Verdict check_equiv_fo3(const FoPtr& f1, const FoPtr& f2, const Signature& sig,
                        const OracleBudget& budget = {});

// type_of(e1) == type_of(e2) required; metavariables are treated as fresh
// predicates of their declared (schematic) type.
Verdict check_equiv_ra(const RaPtr& e1, const RaPtr& e2, const OracleBudget& budget = {});

}  // namespace fo3ra

#endif
