#ifndef FO3RA_TESTKIT_HPP
#define FO3RA_TESTKIT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fo3ra/model.hpp"
#include "fo3ra/translate.hpp"

namespace fo3ra {

// Hom: sort U with a, b, c over (U,U). Het: sorts P, Q, R with a: (P,Q),
// b: (Q,R), c: (P,P), plus the endpoint sorts Left and Right used by the
// translation target (no predicates over them, so models stay small).
Signature default_signature(Mode mode);

struct FuzzConfig {
  unsigned long long seed = 0;
  int count = 100;
  int target_size = 12;
  Mode mode = Mode::Hom;
  Signature sig = default_signature(Mode::Hom);
  bool simplify = true;
  RuleSet rules;  // empty: translate without simplification even if simplify is set
  OracleBudget budget;
};

// Closed well-typed formula of exactly target_size nodes, variable names drawn
// from {x, y, z}, quantifier sorts from those mentioned by some predicate.
// Deterministic function of (cfg.seed, index).
FoPtr random_fo3(const FuzzConfig& cfg, int index);

struct RoundTripReport {
  bool valid = false;
  std::string stage;  // "" when valid, else translate | backtranslate | oracle
  std::string error;
  TranslationTrace trace;
  std::optional<FiniteModel> counterexample;
  int raw_size = 0;
  int simplified_size = 0;
};

// translate -> close(backtranslate) -> check_equiv_fo3 against the input.
RoundTripReport round_trip(const FoPtr& f, const FuzzConfig& cfg);

struct FuzzSummary {
  int passed = 0;
  int failed = 0;
  std::vector<std::pair<int, RoundTripReport>> failures;  // case index, report

  bool ok() const { return failed == 0; }
};

FuzzSummary fuzz(const FuzzConfig& cfg, std::ostream* progress = nullptr);

// Replayable artifact: case index, formula, trace and counterexample model.
std::string render_failure(int index, const FoPtr& formula, const RoundTripReport& r);

}  // namespace fo3ra

#endif
