#include "fo3ra/check.hpp"

#include <map>

#include "fo3ra/pretty.hpp"

namespace fo3ra {

namespace {

void check_ra_rec(const RaPtr& e, const Signature& sig, std::vector<Violation>& out) {
  switch (e->kind) {
    case RaKind::Atom: {
      if (e->meta) break;  // metavariables carry their own schematic typing
      if (!sig.has_pred(e->name)) {
        out.push_back({1, "unknown predicate `" + e->name + "` in " + pretty_print(e)});
        break;
      }
      const auto& d = sig.pred_type(e->name);
      if (d.first != e->t1 || d.second != e->t2) {
        out.push_back({1, "condition 1: `" + pretty_print(e) + "` conflicts with declared type " +
                              e->name + "[" + d.first + "," + d.second + "]"});
      }
      break;
    }
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      break;
    case RaKind::Union:
    case RaKind::Inter: {
      check_ra_rec(e->lhs, sig, out);
      check_ra_rec(e->rhs, sig, out);
      if (type_of(e->lhs) != type_of(e->rhs)) {
        out.push_back({2, "condition 2: operand types differ in " + pretty_print(e)});
      }
      break;
    }
    case RaKind::Compose:
    case RaKind::Dagger: {
      check_ra_rec(e->lhs, sig, out);
      check_ra_rec(e->rhs, sig, out);
      if (type_of(e->lhs).second != type_of(e->rhs).first) {
        out.push_back({3, "condition 3: d2(lhs) != d1(rhs) in " + pretty_print(e)});
      }
      break;
    }
    case RaKind::Complement:
    case RaKind::Converse:
      check_ra_rec(e->lhs, sig, out);
      break;
  }
}

void check_fo3_rec(const FoPtr& f, const Signature& sig,
                   std::map<std::string, Sort>& bound, std::vector<Violation>& out) {
  switch (f->kind) {
    case FoKind::Atom: {
      auto s1 = bound.find(f->v1);
      auto s2 = bound.find(f->v2);
      if (s1 == bound.end()) out.push_back({0, "unbound variable `" + f->v1 + "` in " + pretty_print(f)});
      if (s2 == bound.end()) out.push_back({0, "unbound variable `" + f->v2 + "` in " + pretty_print(f)});
      if (!sig.has_pred(f->pred)) {
        out.push_back({1, "unknown predicate `" + f->pred + "` in " + pretty_print(f)});
        break;
      }
      if (s1 != bound.end() && s2 != bound.end()) {
        const auto& d = sig.pred_type(f->pred);
        if (s1->second != d.first || s2->second != d.second) {
          out.push_back({1, "argument sorts (" + s1->second + "," + s2->second +
                                ") do not match d(" + f->pred + ") = (" + d.first + "," +
                                d.second + ") in " + pretty_print(f)});
        }
      }
      break;
    }
    case FoKind::Equals:
      if (!bound.count(f->v1)) out.push_back({0, "unbound variable `" + f->v1 + "` in " + pretty_print(f)});
      if (!bound.count(f->v2)) out.push_back({0, "unbound variable `" + f->v2 + "` in " + pretty_print(f)});
      break;
    case FoKind::Truth:
    case FoKind::Falsehood:
      break;
    case FoKind::Or:
    case FoKind::And:
      check_fo3_rec(f->lhs, sig, bound, out);
      check_fo3_rec(f->rhs, sig, bound, out);
      break;
    case FoKind::Exists:
    case FoKind::Forall: {
      if (!sig.has_sort(f->sort)) {
        out.push_back({0, "unknown sort `" + f->sort + "` in quantifier over " + f->var});
      }
      auto it = bound.find(f->var);
      bool had = it != bound.end();
      Sort prev = had ? it->second : Sort{};
      bound[f->var] = f->sort;
      check_fo3_rec(f->lhs, sig, bound, out);
      if (had)
        bound[f->var] = prev;
      else
        bound.erase(f->var);
      break;
    }
    case FoKind::Not:
      check_fo3_rec(f->lhs, sig, bound, out);
      break;
  }
}

}  // namespace

std::vector<Violation> check_well_typed_ra(const RaPtr& e, const Signature& sig) {
  std::vector<Violation> out;
  check_ra_rec(e, sig, out);
  return out;
}

std::vector<Violation> check_closed_and_typed_fo3(const FoPtr& f, const Signature& sig) {
  std::vector<Violation> out;
  std::map<std::string, Sort> bound;
  check_fo3_rec(f, sig, bound, out);
  return out;
}

namespace {
[[noreturn]] void raise(const std::vector<Violation>& vs) {
  std::string msg;
  for (const auto& v : vs) {
    if (!msg.empty()) msg += "; ";
    msg += v.message;
  }
  throw TypeError(msg);
}
}  // namespace

void require_well_typed(const RaPtr& e, const Signature& sig) {
  auto vs = check_well_typed_ra(e, sig);
  if (!vs.empty()) raise(vs);
}

void require_closed_and_typed(const FoPtr& f, const Signature& sig) {
  auto vs = check_closed_and_typed_fo3(f, sig);
  if (!vs.empty()) raise(vs);
}

}  // namespace fo3ra
