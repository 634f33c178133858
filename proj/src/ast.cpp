#include "fo3ra/ast.hpp"

#include <algorithm>

namespace fo3ra {

void Signature::add_sort(const Sort& name) {
  if (name.empty()) throw TypeError("empty sort name");
  if (has_sort(name)) throw TypeError("duplicate sort declaration: " + name);
  sorts_.push_back(name);
}

void Signature::add_pred(const std::string& name, const Sort& d1, const Sort& d2) {
  if (preds_.count(name)) throw TypeError("duplicate predicate declaration: " + name);
  if (!has_sort(d1)) throw TypeError("unknown sort " + d1 + " in declaration of " + name);
  if (!has_sort(d2)) throw TypeError("unknown sort " + d2 + " in declaration of " + name);
  preds_.emplace(name, std::make_pair(d1, d2));
}

void Signature::ensure_pred_hom(const std::string& name) {
  if (!preds_.count(name)) preds_.emplace(name, std::make_pair(kUniverse, kUniverse));
}

bool Signature::has_sort(const Sort& name) const {
  return std::find(sorts_.begin(), sorts_.end(), name) != sorts_.end();
}

bool Signature::has_pred(const std::string& name) const { return preds_.count(name) != 0; }

const std::pair<Sort, Sort>& Signature::pred_type(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw TypeError("unknown predicate: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {
FoPtr mk(Fo3 f) { return std::make_shared<const Fo3>(std::move(f)); }
RaPtr mk(RaExpr e) { return std::make_shared<const RaExpr>(std::move(e)); }
}  // namespace

FoPtr fo_atom(std::string pred, std::string v1, std::string v2) {
  return mk(Fo3{FoKind::Atom, std::move(pred), std::move(v1), std::move(v2), "", "", nullptr, nullptr});
}
FoPtr fo_equals(std::string v1, std::string v2) {
  return mk(Fo3{FoKind::Equals, "", std::move(v1), std::move(v2), "", "", nullptr, nullptr});
}
FoPtr fo_truth() { return mk(Fo3{FoKind::Truth, "", "", "", "", "", nullptr, nullptr}); }
FoPtr fo_falsehood() { return mk(Fo3{FoKind::Falsehood, "", "", "", "", "", nullptr, nullptr}); }
FoPtr fo_or(FoPtr l, FoPtr r) {
  return mk(Fo3{FoKind::Or, "", "", "", "", "", std::move(l), std::move(r)});
}
FoPtr fo_and(FoPtr l, FoPtr r) {
  return mk(Fo3{FoKind::And, "", "", "", "", "", std::move(l), std::move(r)});
}
FoPtr fo_not(FoPtr body) {
  return mk(Fo3{FoKind::Not, "", "", "", "", "", std::move(body), nullptr});
}
FoPtr fo_exists(std::string var, Sort sort, FoPtr body) {
  return mk(Fo3{FoKind::Exists, "", "", "", std::move(var), std::move(sort), std::move(body), nullptr});
}
FoPtr fo_forall(std::string var, Sort sort, FoPtr body) {
  return mk(Fo3{FoKind::Forall, "", "", "", std::move(var), std::move(sort), std::move(body), nullptr});
}

bool is_quantifier(FoKind k) { return k == FoKind::Exists || k == FoKind::Forall; }

bool equal(const FoPtr& a, const FoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FoKind::Atom:
      return a->pred == b->pred && a->v1 == b->v1 && a->v2 == b->v2;
    case FoKind::Equals:
      return a->v1 == b->v1 && a->v2 == b->v2;
    case FoKind::Truth:
    case FoKind::Falsehood:
      return true;
    case FoKind::Or:
    case FoKind::And:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FoKind::Exists:
    case FoKind::Forall:
      return a->var == b->var && a->sort == b->sort && equal(a->lhs, b->lhs);
    case FoKind::Not:
      return equal(a->lhs, b->lhs);
  }
  return false;
}

int size(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::Atom:
    case FoKind::Equals:
    case FoKind::Truth:
    case FoKind::Falsehood:
      return 1;
    case FoKind::Or:
    case FoKind::And:
      return 1 + size(f->lhs) + size(f->rhs);
    case FoKind::Exists:
    case FoKind::Forall:
    case FoKind::Not:
      return 1 + size(f->lhs);
  }
  return 0;
}

namespace {
void free_vars_rec(const FoPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FoKind::Atom:
      if (!bound.count(f->v1)) out.insert(f->v1);
      if (!bound.count(f->v2)) out.insert(f->v2);
      break;
    case FoKind::Equals:
      if (!bound.count(f->v1)) out.insert(f->v1);
      if (!bound.count(f->v2)) out.insert(f->v2);
      break;
    case FoKind::Truth:
    case FoKind::Falsehood:
      break;
    case FoKind::Or:
    case FoKind::And:
      free_vars_rec(f->lhs, bound, out);
      free_vars_rec(f->rhs, bound, out);
      break;
    case FoKind::Exists:
    case FoKind::Forall: {
      bool fresh = bound.insert(f->var).second;
      free_vars_rec(f->lhs, bound, out);
      if (fresh) bound.erase(f->var);
      break;
    }
    case FoKind::Not:
      free_vars_rec(f->lhs, bound, out);
      break;
  }
}
}  // namespace

std::set<std::string> free_vars(const FoPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

std::set<std::string> var_names(const FoPtr& f) {
  std::set<std::string> out;
  switch (f->kind) {
    case FoKind::Atom:
    case FoKind::Equals:
      out.insert(f->v1);
      out.insert(f->v2);
      break;
    case FoKind::Truth:
    case FoKind::Falsehood:
      break;
    case FoKind::Or:
    case FoKind::And: {
      out = var_names(f->lhs);
      auto r = var_names(f->rhs);
      out.insert(r.begin(), r.end());
      break;
    }
    case FoKind::Exists:
    case FoKind::Forall: {
      out = var_names(f->lhs);
      out.insert(f->var);
      break;
    }
    case FoKind::Not:
      out = var_names(f->lhs);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------

RaPtr ra_atom(std::string name, Sort t1, Sort t2, bool meta) {
  return mk(RaExpr{RaKind::Atom, std::move(name), meta, std::move(t1), std::move(t2), nullptr, nullptr});
}
RaPtr ra_top(Sort t1, Sort t2) {
  return mk(RaExpr{RaKind::Top, "", false, std::move(t1), std::move(t2), nullptr, nullptr});
}
RaPtr ra_bot(Sort t1, Sort t2) {
  return mk(RaExpr{RaKind::Bot, "", false, std::move(t1), std::move(t2), nullptr, nullptr});
}
RaPtr ra_id(Sort t) {
  Sort t2 = t;
  return mk(RaExpr{RaKind::Id, "", false, std::move(t), std::move(t2), nullptr, nullptr});
}
RaPtr ra_id2(Sort t1, Sort t2) {
  return mk(RaExpr{RaKind::Id, "", false, std::move(t1), std::move(t2), nullptr, nullptr});
}
RaPtr ra_union(RaPtr l, RaPtr r) {
  return mk(RaExpr{RaKind::Union, "", false, "", "", std::move(l), std::move(r)});
}
RaPtr ra_inter(RaPtr l, RaPtr r) {
  return mk(RaExpr{RaKind::Inter, "", false, "", "", std::move(l), std::move(r)});
}
RaPtr ra_compose(RaPtr l, RaPtr r) {
  return mk(RaExpr{RaKind::Compose, "", false, "", "", std::move(l), std::move(r)});
}
RaPtr ra_dagger(RaPtr l, RaPtr r) {
  return mk(RaExpr{RaKind::Dagger, "", false, "", "", std::move(l), std::move(r)});
}
RaPtr ra_complement(RaPtr body) {
  return mk(RaExpr{RaKind::Complement, "", false, "", "", std::move(body), nullptr});
}
RaPtr ra_converse(RaPtr body) {
  return mk(RaExpr{RaKind::Converse, "", false, "", "", std::move(body), nullptr});
}

bool equal(const RaPtr& a, const RaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RaKind::Atom:
      return a->name == b->name && a->meta == b->meta && a->t1 == b->t1 && a->t2 == b->t2;
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      return a->t1 == b->t1 && a->t2 == b->t2;
    case RaKind::Union:
    case RaKind::Inter:
    case RaKind::Compose:
    case RaKind::Dagger:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case RaKind::Complement:
    case RaKind::Converse:
      return equal(a->lhs, b->lhs);
  }
  return false;
}

int size(const RaPtr& e) {
  switch (e->kind) {
    case RaKind::Atom:
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      return 1;
    case RaKind::Union:
    case RaKind::Inter:
    case RaKind::Compose:
    case RaKind::Dagger:
      return 1 + size(e->lhs) + size(e->rhs);
    case RaKind::Complement:
    case RaKind::Converse:
      return 1 + size(e->lhs);
  }
  return 0;
}

std::pair<Sort, Sort> type_of(const RaPtr& e) {
  switch (e->kind) {
    case RaKind::Atom:
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      return {e->t1, e->t2};
    case RaKind::Union:
    case RaKind::Inter:
      return type_of(e->lhs);
    case RaKind::Compose:
    case RaKind::Dagger:
      return {type_of(e->lhs).first, type_of(e->rhs).second};
    case RaKind::Complement:
      return type_of(e->lhs);
    case RaKind::Converse: {
      auto t = type_of(e->lhs);
      return {t.second, t.first};
    }
  }
  return {"", ""};
}

namespace {
void metavar_counts_rec(const RaPtr& e, std::map<std::string, int>& out) {
  if (e->kind == RaKind::Atom) {
    if (e->meta) out[e->name]++;
    return;
  }
  if (e->lhs) metavar_counts_rec(e->lhs, out);
  if (e->rhs) metavar_counts_rec(e->rhs, out);
}
}  // namespace

std::map<std::string, int> metavar_counts(const RaPtr& e) {
  std::map<std::string, int> out;
  metavar_counts_rec(e, out);
  return out;
}

}  // namespace fo3ra
