#ifndef FO3RA_RULEGEN_HPP
#define FO3RA_RULEGEN_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fo3ra/model.hpp"
#include "fo3ra/simplify.hpp"

namespace fo3ra {

struct MinerConfig {
  int max_lhs_size = 5;
  int max_metavars = 3;
  OracleBudget budget;
  std::string out_path;  // non-empty: save after each size stage and resume from it
};

// Every homogeneous pattern of exactly `size` nodes over metavariables (in
// canonical first-occurrence order A, B, ...), top, bot, id and the six
// operators. Deterministic order, no duplicates.
std::vector<RaPtr> enumerate_patterns(int size, int max_metavars);

// Pre-oracle candidates at LHS size n: rhs smaller, metavariable multiplicity
// non-increasing, both sides irreducible by `earlier`.
std::vector<std::pair<RaPtr, RaPtr>> candidate_pairs(int n, const MinerConfig& cfg,
                                                     const RuleSet& earlier);

// Mines the homogeneous rule dictionary up to cfg.max_lhs_size. Progress lines
// `size=N candidates=C accepted=K elapsed=T` go to `progress` when given.
RuleSet mine(const MinerConfig& cfg, std::ostream* progress = nullptr);

// Drops rules whose lhs is rewritten by an earlier prefix of the set to the
// same result as their rhs.
RuleSet redundancy_filter(const RuleSet& rules);

// All oracle-valid sort-variable typings of each homogeneous rule, emitted
// coarsest partition first, then redundancy-filtered.
RuleSet lift_heterogeneous(const RuleSet& hom_rules, const OracleBudget& budget,
                           std::ostream* progress = nullptr);

}  // namespace fo3ra

#endif
