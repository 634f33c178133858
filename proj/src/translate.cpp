#include "fo3ra/translate.hpp"

#include <algorithm>
#include <sstream>

#include "fo3ra/check.hpp"
#include "fo3ra/pretty.hpp"

namespace fo3ra {

namespace {

bool is_literal(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::Atom:
    case FoKind::Equals:
    case FoKind::Truth:
    case FoKind::Falsehood:
      return true;
    case FoKind::Not:
      return is_literal(f->lhs);
    default:
      return false;
  }
}

FoPtr make_quant(FoKind k, const std::string& var, const Sort& sort, FoPtr body) {
  return k == FoKind::Exists ? fo_exists(var, sort, std::move(body))
                             : fo_forall(var, sort, std::move(body));
}

void flatten(const FoPtr& f, FoKind op, std::vector<FoPtr>& out) {
  if (f->kind == op) {
    flatten(f->lhs, op, out);
    flatten(f->rhs, op, out);
  } else {
    out.push_back(f);
  }
}

FoPtr fold(const std::vector<FoPtr>& parts, FoKind op) {
  FoPtr acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i)
    acc = op == FoKind::And ? fo_and(acc, parts[i]) : fo_or(acc, parts[i]);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

FoPtr nnf(const FoPtr& f, bool neg) {
  switch (f->kind) {
    case FoKind::Atom:
    case FoKind::Equals:
      return neg ? fo_not(f) : f;
    case FoKind::Truth:
      return neg ? fo_falsehood() : fo_truth();
    case FoKind::Falsehood:
      return neg ? fo_truth() : fo_falsehood();
    case FoKind::Not:
      return nnf(f->lhs, !neg);
    case FoKind::Or:
      return neg ? fo_and(nnf(f->lhs, true), nnf(f->rhs, true))
                 : fo_or(nnf(f->lhs, false), nnf(f->rhs, false));
    case FoKind::And:
      return neg ? fo_or(nnf(f->lhs, true), nnf(f->rhs, true))
                 : fo_and(nnf(f->lhs, false), nnf(f->rhs, false));
    case FoKind::Exists:
      return make_quant(neg ? FoKind::Forall : FoKind::Exists, f->var, f->sort, nnf(f->lhs, neg));
    case FoKind::Forall:
      return make_quant(neg ? FoKind::Exists : FoKind::Forall, f->var, f->sort, nnf(f->lhs, neg));
  }
  throw TypeError("unreachable formula kind");
}

}  // namespace

FoPtr to_nnf(const FoPtr& f) { return nnf(f, false); }

// ---------------------------------------------------------------------------
// Good form: the mutually recursive T_minus / T_exists / T_forall

namespace {

using Clause = std::vector<FoPtr>;       // conjunction (under exists) or disjunction
using ClauseSet = std::vector<Clause>;   // outer disjunction / conjunction

FoPtr good_minus(const FoPtr& f);

Clause merge_clause(const Clause& a, const Clause& b) {
  Clause out = a;
  for (const FoPtr& g : b) {
    bool dup = false;
    for (const FoPtr& h : out) dup = dup || equal(g, h);
    if (!dup) out.push_back(g);
  }
  return out;
}

std::string clause_key(const Clause& c) {
  std::vector<std::string> parts;
  for (const FoPtr& g : c) parts.push_back(pretty_print(g));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + "\n";
  return key;
}

void push_dedup(ClauseSet& set, Clause c) {
  std::string key = clause_key(c);
  for (const Clause& d : set)
    if (clause_key(d) == key) return;
  set.push_back(std::move(c));
}

// existential=true computes T_exists (a DNF as a set of conjunction-sets);
// existential=false computes T_forall (a CNF as a set of disjunction-sets).
ClauseSet good_sets(const FoPtr& f, bool existential) {
  if (is_literal(f)) return {{f}};
  if (is_quantifier(f->kind)) return {{good_minus(f)}};
  bool crosses = (f->kind == FoKind::And) == existential;
  ClauseSet l = good_sets(f->lhs, existential);
  ClauseSet r = good_sets(f->rhs, existential);
  ClauseSet out;
  if (crosses) {
    for (const Clause& a : l)
      for (const Clause& b : r) push_dedup(out, merge_clause(a, b));
  } else {
    for (const Clause& a : l) push_dedup(out, a);
    for (const Clause& b : r) push_dedup(out, b);
  }
  return out;
}

FoPtr good_minus(const FoPtr& f) {
  if (is_literal(f)) return f;
  switch (f->kind) {
    case FoKind::Or:
      return fo_or(good_minus(f->lhs), good_minus(f->rhs));
    case FoKind::And:
      return fo_and(good_minus(f->lhs), good_minus(f->rhs));
    case FoKind::Exists: {
      ClauseSet sets = good_sets(f->lhs, true);
      std::vector<FoPtr> disjuncts;
      for (const Clause& c : sets)
        disjuncts.push_back(fo_exists(f->var, f->sort, fold(c, FoKind::And)));
      return fold(disjuncts, FoKind::Or);
    }
    case FoKind::Forall: {
      ClauseSet sets = good_sets(f->lhs, false);
      std::vector<FoPtr> conjuncts;
      for (const Clause& c : sets)
        conjuncts.push_back(fo_forall(f->var, f->sort, fold(c, FoKind::Or)));
      return fold(conjuncts, FoKind::And);
    }
    default:
      throw TypeError("to_good expects a formula in negation normal form");
  }
}

}  // namespace

FoPtr to_good(const FoPtr& f) { return good_minus(f); }

// ---------------------------------------------------------------------------
// Nice form

FoPtr to_nice(const FoPtr& f) {
  if (is_literal(f)) return f;
  switch (f->kind) {
    case FoKind::Or:
      return fo_or(to_nice(f->lhs), to_nice(f->rhs));
    case FoKind::And:
      return fo_and(to_nice(f->lhs), to_nice(f->rhs));
    case FoKind::Exists:
    case FoKind::Forall: {
      FoKind op = f->kind == FoKind::Exists ? FoKind::And : FoKind::Or;
      std::vector<FoPtr> raw, parts;
      flatten(f->lhs, op, raw);
      for (const FoPtr& p : raw) flatten(to_nice(p), op, parts);
      std::vector<FoPtr> hoisted, inside;
      for (const FoPtr& p : parts)
        (free_vars(p).count(f->var) ? inside : hoisted).push_back(p);
      if (inside.empty()) return fold(hoisted, op);  // vacuous quantifier
      FoPtr quant = make_quant(f->kind, f->var, f->sort, fold(inside, op));
      if (hoisted.empty()) return quant;
      return op == FoKind::And ? fo_and(fold(hoisted, op), quant)
                               : fo_or(fold(hoisted, op), quant);
    }
    default:
      throw TypeError("to_nice expects a good formula");
  }
}

// ---------------------------------------------------------------------------
// Final translation

namespace {

const char* kNamePool[] = {"x", "y", "z", "w", "v", "u"};

std::string fresh_name(const std::set<std::string>& avoid) {
  for (const char* n : kNamePool)
    if (!avoid.count(n)) return n;
  int i = 0;
  while (avoid.count("v" + std::to_string(i))) ++i;
  return "v" + std::to_string(i);
}

// Capture-avoiding rename of the free occurrences of `from` to `to`.
FoPtr rename_var(const FoPtr& f, const std::string& from, const std::string& to) {
  if (from == to) return f;
  switch (f->kind) {
    case FoKind::Atom:
      return fo_atom(f->pred, f->v1 == from ? to : f->v1, f->v2 == from ? to : f->v2);
    case FoKind::Equals:
      return fo_equals(f->v1 == from ? to : f->v1, f->v2 == from ? to : f->v2);
    case FoKind::Truth:
    case FoKind::Falsehood:
      return f;
    case FoKind::Not:
      return fo_not(rename_var(f->lhs, from, to));
    case FoKind::Or:
      return fo_or(rename_var(f->lhs, from, to), rename_var(f->rhs, from, to));
    case FoKind::And:
      return fo_and(rename_var(f->lhs, from, to), rename_var(f->rhs, from, to));
    case FoKind::Exists:
    case FoKind::Forall: {
      if (f->var == from) return f;
      if (f->var == to && free_vars(f->lhs).count(from)) {
        std::set<std::string> avoid = var_names(f->lhs);
        avoid.insert(from);
        avoid.insert(to);
        std::string nv = fresh_name(avoid);
        FoPtr body = rename_var(f->lhs, to, nv);
        return make_quant(f->kind, nv, f->sort, rename_var(body, from, to));
      }
      return make_quant(f->kind, f->var, f->sort, rename_var(f->lhs, from, to));
    }
  }
  throw TypeError("unreachable formula kind");
}

RaPtr tr(const FoPtr& f, const std::string& av, const Sort& as, const std::string& bv,
         const Sort& bs) {
  switch (f->kind) {
    case FoKind::Truth:
      return ra_top(as, bs);
    case FoKind::Falsehood:
      return ra_bot(as, bs);
    case FoKind::Atom: {
      if (f->v1 == av && f->v2 == bv) return ra_atom(f->pred, as, bs);
      if (f->v1 == bv && f->v2 == av) return ra_converse(ra_atom(f->pred, bs, as));
      if (f->v1 == av && f->v2 == av)
        return ra_compose(ra_inter(ra_atom(f->pred, as, as), ra_id(as)), ra_top(as, bs));
      if (f->v1 == bv && f->v2 == bv)
        return ra_compose(ra_top(as, bs), ra_inter(ra_atom(f->pred, bs, bs), ra_id(bs)));
      throw NotNice("atom " + pretty_print(f) + " does not fit the target pair (" + av + "," +
                    bv + ")");
    }
    case FoKind::Equals: {
      if (f->v1 == f->v2 && (f->v1 == av || f->v1 == bv)) return ra_top(as, bs);
      if (f->v1 == av && f->v2 == bv) return ra_id2(as, bs);
      if (f->v1 == bv && f->v2 == av) return ra_converse(ra_id2(bs, as));
      throw NotNice("equality " + pretty_print(f) + " does not fit the target pair (" + av +
                    "," + bv + ")");
    }
    case FoKind::Not:
      return ra_complement(tr(f->lhs, av, as, bv, bs));
    case FoKind::And:
      return ra_inter(tr(f->lhs, av, as, bv, bs), tr(f->rhs, av, as, bv, bs));
    case FoKind::Or:
      return ra_union(tr(f->lhs, av, as, bv, bs), tr(f->rhs, av, as, bv, bs));
    case FoKind::Exists:
    case FoKind::Forall: {
      bool ex = f->kind == FoKind::Exists;
      std::string z = f->var;
      FoPtr body = f->lhs;
      if (z == av || z == bv) {
        std::string nz = fresh_name({av, bv});
        body = rename_var(body, z, nz);
        z = nz;
      }
      std::vector<FoPtr> parts, left, right;
      flatten(body, ex ? FoKind::And : FoKind::Or, parts);
      for (const FoPtr& p : parts) {
        std::set<std::string> fv = free_vars(p);
        bool only_z = true, fits_az = true, fits_zb = true;
        for (const auto& v : fv) {
          only_z = only_z && v == z;
          fits_az = fits_az && (v == av || v == z);
          fits_zb = fits_zb && (v == z || v == bv);
        }
        if (only_z || (!fits_az && fits_zb))
          right.push_back(p);
        else if (fits_az)
          left.push_back(p);
        else
          throw NotNice("subformula " + pretty_print(p) + " depends on both targets and " + z);
      }
      FoPtr neutral = ex ? fo_truth() : fo_falsehood();
      FoKind op = ex ? FoKind::And : FoKind::Or;
      FoPtr lf = left.empty() ? neutral : fold(left, op);
      FoPtr rf = right.empty() ? neutral : fold(right, op);
      RaPtr l = tr(lf, av, as, z, f->sort);
      RaPtr r = tr(rf, z, f->sort, bv, bs);
      return ex ? ra_compose(l, r) : ra_dagger(l, r);
    }
  }
  throw TypeError("unreachable formula kind");
}

}  // namespace

RaPtr final_translate(const FoPtr& f, const TargetPair& tgt) {
  if (tgt.lvar == tgt.rvar) throw TypeError("target variables must be distinct");
  return tr(f, tgt.lvar, tgt.lsort, tgt.rvar, tgt.rsort);
}

// ---------------------------------------------------------------------------
// Variable reduction

namespace {

void check_fo3_width(const FoPtr& f) {
  if (free_vars(f).size() > 3)
    throw TooManyVariables("subformula " + pretty_print(f) + " has more than three free variables");
  if (f->lhs) check_fo3_width(f->lhs);
  if (f->rhs) check_fo3_width(f->rhs);
}

FoPtr reduce_rec(const FoPtr& f, std::map<std::string, std::string> env,
                 std::vector<std::string>& pool) {
  auto lookup = [&](const std::string& v) {
    auto it = env.find(v);
    return it == env.end() ? v : it->second;
  };
  switch (f->kind) {
    case FoKind::Atom:
      return fo_atom(f->pred, lookup(f->v1), lookup(f->v2));
    case FoKind::Equals:
      return fo_equals(lookup(f->v1), lookup(f->v2));
    case FoKind::Truth:
    case FoKind::Falsehood:
      return f;
    case FoKind::Not:
      return fo_not(reduce_rec(f->lhs, env, pool));
    case FoKind::Or:
      return fo_or(reduce_rec(f->lhs, env, pool), reduce_rec(f->rhs, env, pool));
    case FoKind::And:
      return fo_and(reduce_rec(f->lhs, env, pool), reduce_rec(f->rhs, env, pool));
    case FoKind::Exists:
    case FoKind::Forall: {
      std::set<std::string> conflict;
      for (const auto& v : free_vars(f->lhs))
        if (v != f->var) conflict.insert(lookup(v));
      std::string name;
      bool in_pool = std::find(pool.begin(), pool.end(), f->var) != pool.end();
      if (!conflict.count(f->var) && (in_pool || pool.size() < 3)) {
        name = f->var;
        if (!in_pool) pool.push_back(name);
      } else {
        name.clear();
        for (const auto& g : pool)
          if (!conflict.count(g)) {
            name = g;
            break;
          }
        if (name.empty()) {
          if (pool.size() >= 3)
            throw TooManyVariables("quantifier over " + f->var +
                                   " cannot be renamed within three variable names");
          for (const char* c : {"x", "y", "z"})
            if (!conflict.count(c) &&
                std::find(pool.begin(), pool.end(), c) == pool.end() && name.empty())
              name = c;
          pool.push_back(name);
        }
      }
      env[f->var] = name;
      return make_quant(f->kind, name, f->sort, reduce_rec(f->lhs, env, pool));
    }
  }
  throw TypeError("unreachable formula kind");
}

}  // namespace

FoPtr reduce_variables(const FoPtr& f) {
  check_fo3_width(f);
  std::vector<std::string> pool;
  return reduce_rec(f, {}, pool);
}

// ---------------------------------------------------------------------------

TranslationTrace translate(const FoPtr& f, const Signature& sig, Mode mode,
                           const RuleSet* rules) {
  TranslationTrace t;
  t.original = f;
  FoPtr reduced = reduce_variables(f);
  require_closed_and_typed(reduced, sig);
  t.nnf = to_nnf(reduced);
  t.good = to_good(t.nnf);
  t.nice = to_nice(t.good);
  TargetPair tgt = mode == Mode::Het ? TargetPair{"x", "Left", "y", "Right"}
                                     : TargetPair{"x", kUniverse, "y", kUniverse};
  t.raw = final_translate(t.nice, tgt);
  if (rules && !rules->rules.empty()) {
    auto [expr, trace] = simplify_full(t.raw, *rules);
    t.simplified = expr;
    t.rules = trace;
  } else {
    t.simplified = t.raw;
  }
  return t;
}

std::string render_trace(const TranslationTrace& t) {
  std::ostringstream os;
  os << "1. Original Expression: " << pretty_print(t.original) << "\n";
  os << "2. Negation Normal Form: " << pretty_print(t.nnf) << "\n";
  os << "3. Good FO3 Translation: " << pretty_print(t.good) << "\n";
  os << "4. Nice FO3 Translation: " << pretty_print(t.nice) << "\n";
  os << "5. Final Translation: " << pretty_print(t.raw) << "\n";
  os << "6. Final Translation Simplified: " << pretty_print(t.simplified) << "\n";
  return os.str();
}

}  // namespace fo3ra
