#ifndef FO3RA_AST_HPP
#define FO3RA_AST_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fo3ra {

using Sort = std::string;

enum class Mode { Hom, Het };

// The single sort of homogeneous signatures.
inline const Sort kUniverse = "U";

class TypeError : public std::runtime_error {
 public:
  explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Declared sorts plus the typing function d : predicate -> Sort x Sort.
class Signature {
 public:
  Signature() = default;

  static Signature homogeneous() {
    Signature s;
    s.add_sort(kUniverse);
    return s;
  }

  void add_sort(const Sort& name);
  void add_pred(const std::string& name, const Sort& d1, const Sort& d2);

  // Used by homogeneous parsing: first use of a predicate declares it at (U,U).
  void ensure_pred_hom(const std::string& name);

  bool has_sort(const Sort& name) const;
  bool has_pred(const std::string& name) const;
  const std::pair<Sort, Sort>& pred_type(const std::string& name) const;

  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::map<std::string, std::pair<Sort, Sort>>& preds() const { return preds_; }

  bool is_homogeneous() const {
    return sorts_.size() == 1 && sorts_[0] == kUniverse;
  }

 private:
  std::vector<Sort> sorts_;  // insertion order, unique
  std::map<std::string, std::pair<Sort, Sort>> preds_;
};

// ---------------------------------------------------------------------------
// FO3 formulas

enum class FoKind {
  Atom,       // pred(v1, v2)
  Equals,     // v1 = v2
  Truth,
  Falsehood,
  Or,
  And,
  Exists,     // exists var:sort. lhs
  Forall,
  Not,
};

struct Fo3;
using FoPtr = std::shared_ptr<const Fo3>;

struct Fo3 {
  FoKind kind;
  std::string pred;      // Atom
  std::string v1, v2;    // Atom, Equals
  std::string var;       // quantifiers
  Sort sort;             // quantifiers
  FoPtr lhs, rhs;        // children; Not and quantifiers use lhs only
};

FoPtr fo_atom(std::string pred, std::string v1, std::string v2);
FoPtr fo_equals(std::string v1, std::string v2);
FoPtr fo_truth();
FoPtr fo_falsehood();
FoPtr fo_or(FoPtr l, FoPtr r);
FoPtr fo_and(FoPtr l, FoPtr r);
FoPtr fo_not(FoPtr body);
FoPtr fo_exists(std::string var, Sort sort, FoPtr body);
FoPtr fo_forall(std::string var, Sort sort, FoPtr body);

bool equal(const FoPtr& a, const FoPtr& b);
int size(const FoPtr& f);

std::set<std::string> free_vars(const FoPtr& f);
// Every variable name occurring in f, bound or free.
std::set<std::string> var_names(const FoPtr& f);

bool is_quantifier(FoKind k);

// ---------------------------------------------------------------------------
// RA expressions

enum class RaKind {
  Atom,        // name[t1,t2]; `meta` marks a pattern metavariable
  Top,
  Bot,
  Id,          // id[t1] in the grammar; t1 != t2 only for cross-sort identity
  Union,
  Inter,
  Compose,
  Dagger,
  Complement,  // uses lhs
  Converse,    // uses lhs
};

struct RaExpr;
using RaPtr = std::shared_ptr<const RaExpr>;

struct RaExpr {
  RaKind kind;
  std::string name;   // Atom
  bool meta = false;  // Atom used as a rewrite-pattern metavariable
  Sort t1, t2;        // leaf typing
  RaPtr lhs, rhs;
};

RaPtr ra_atom(std::string name, Sort t1, Sort t2, bool meta = false);
RaPtr ra_top(Sort t1, Sort t2);
RaPtr ra_bot(Sort t1, Sort t2);
RaPtr ra_id(Sort t);
RaPtr ra_id2(Sort t1, Sort t2);
RaPtr ra_union(RaPtr l, RaPtr r);
RaPtr ra_inter(RaPtr l, RaPtr r);
RaPtr ra_compose(RaPtr l, RaPtr r);
RaPtr ra_dagger(RaPtr l, RaPtr r);
RaPtr ra_complement(RaPtr body);
RaPtr ra_converse(RaPtr body);

bool equal(const RaPtr& a, const RaPtr& b);
int size(const RaPtr& e);

// The overloaded d: purely structural, derived from leaf typings.
std::pair<Sort, Sort> type_of(const RaPtr& e);

// Metavariable -> occurrence count. Empty for concrete expressions.
std::map<std::string, int> metavar_counts(const RaPtr& e);

}  // namespace fo3ra

#endif
