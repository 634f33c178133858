#ifndef FO3RA_TRANSLATE_HPP
#define FO3RA_TRANSLATE_HPP

#include <string>
#include <vector>

#include "fo3ra/ast.hpp"
#include "fo3ra/simplify.hpp"

namespace fo3ra {

// Source/target variable pair threaded through the final translation.
struct TargetPair {
  std::string lvar;
  Sort lsort;
  std::string rvar;
  Sort rsort;
};

struct TranslationTrace {
  FoPtr original, nnf, good, nice;
  RaPtr raw, simplified;
  std::vector<std::string> rules;  // simplifier steps
};

// A quantifier body cannot be split into {x,z}/{z,y} parts; indicates a
// pipeline bug upstream of final_translate.
class NotNice : public TypeError {
 public:
  using TypeError::TypeError;
};

// The formula cannot be brought down to three variable names by renaming.
class TooManyVariables : public TypeError {
 public:
  using TypeError::TypeError;
};

// Negation normal form: negations only on atomic formulas.
FoPtr to_nnf(const FoPtr& f);

// Good form: each quantifier directly encloses a conjunction (under exists) or
// disjunction (under forall) of literals and quantified subformulas.
FoPtr to_good(const FoPtr& f);

// Nice form: subformulas not depending on the quantified variable are hoisted
// out; vacuous quantifiers are dropped (sorts are non-empty).
FoPtr to_nice(const FoPtr& f);

// The thirteen-case table translating a nice closed formula at a target pair.
RaPtr final_translate(const FoPtr& f, const TargetPair& tgt);

// Renames bound variables (capture-avoidingly, alpha-equivalent result) so at
// most three distinct names remain. Throws TooManyVariables when impossible.
FoPtr reduce_variables(const FoPtr& f);

// Full pipeline. The target pair is x:Left, y:Right in Het mode and x,y over
// the universal sort in Hom mode. rules == nullptr skips simplification.
TranslationTrace translate(const FoPtr& f, const Signature& sig, Mode mode,
                           const RuleSet* rules = nullptr);

// Numbered six-step report in the shape of a worked example.
std::string render_trace(const TranslationTrace& t);

}  // namespace fo3ra

#endif
