#ifndef FO3RA_SIMPLIFY_HPP
#define FO3RA_SIMPLIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fo3ra/ast.hpp"

namespace fo3ra {

// A strictly size-reducing rewrite rule over RA patterns. Patterns are RaExpr
// trees whose atoms are metavariables; heterogeneous patterns draw leaf sorts
// from the sort variables {P,Q,R,S}.
struct RewriteRule {
  std::string name;  // canonical "lhs = rhs" rendering
  RaPtr lhs, rhs;
  Mode mode = Mode::Hom;
};

struct RuleSet {
  Mode mode = Mode::Hom;
  std::vector<RewriteRule> rules;
};

struct Subst {
  std::map<std::string, RaPtr> vars;  // metavariable -> subexpression
  std::map<Sort, Sort> sorts;         // sort variable -> sort
};

// Sort variables allowed in heterogeneous patterns.
bool is_sort_var(const Sort& s);

// Structural match of e against pattern p at the root. Nonlinear metavariable
// and sort-variable occurrences must bind identically.
bool match(const RaPtr& p, const RaPtr& e, Subst& out);

RaPtr instantiate(const RaPtr& p, const Subst& s);

// Empty when the rule satisfies all RewriteRule invariants, else a description
// of the violated one.
std::optional<std::string> rule_violation(const RewriteRule& r);

std::string rule_name(const RaPtr& lhs, const RaPtr& rhs);

// Rule index compiled into a discrimination trie keyed on preorder tokens, so
// shared pattern prefixes are tested once. Behavior is identical to scanning
// the rules in order and taking the first match.
class Matcher {
 public:
  Matcher() = default;
  explicit Matcher(RuleSet rules);  // throws TypeError on an invalid rule

  // First rule whose lhs matches e at the root, with the instantiated rhs.
  std::optional<std::pair<RaPtr, const RewriteRule*>> match_root(const RaPtr& e) const;

  const RuleSet& rules() const { return rules_; }

 private:
  struct Node {
    std::map<std::string, int> next;
    int wild = -1;
    std::vector<int> ends;  // rule indices whose pattern ends here
  };
  std::vector<Node> trie_;
  RuleSet rules_;
};

inline Matcher compile_rules(RuleSet rules) { return Matcher(std::move(rules)); }

// Reference implementation of match_root by linear scan; the trie is
// differential-tested against it.
std::optional<std::pair<RaPtr, const RewriteRule*>> match_root_naive(const RaPtr& e,
                                                                     const RuleSet& rules);

// One rewrite at the shallowest, leftmost matching position.
std::optional<std::pair<RaPtr, std::string>> rewrite_once(const RaPtr& e, const Matcher& m);

// Iterates rewrite_once to fixpoint; returns the result and the rule trace.
std::pair<RaPtr, std::vector<std::string>> simplify_full(const RaPtr& e, const Matcher& m);
std::pair<RaPtr, std::vector<std::string>> simplify_full(const RaPtr& e, const RuleSet& rules);

// Rule files: one `LHS => RHS` per line, `#` comments. Invalid rules are
// rejected with their line number.
RuleSet parse_rules(const std::string& text, Mode mode);
RuleSet load_rules(const std::string& path, Mode mode);
std::string render_rules(const RuleSet& rules);
void save_rules(const RuleSet& rules, const std::string& path);

}  // namespace fo3ra

#endif
