#include "fo3ra/model.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fo3ra {

int FiniteModel::card(const Sort& s) const {
  for (const auto& [name, k] : carriers)
    if (name == s) return k;
  throw TypeError("model has no carrier for sort " + s);
}

std::string FiniteModel::to_text() const {
  std::ostringstream os;
  for (const auto& [name, k] : carriers) {
    os << "sort " << name << " = {";
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << i;
    os << "}\n";
  }
  for (const auto& [name, pairs] : relations) {
    os << "rel " << name << " = {";
    bool first = true;
    for (const auto& [a, b] : pairs) {
      if (!first) os << ",";
      first = false;
      os << "(" << a << "," << b << ")";
    }
    os << "}\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reference evaluators

bool eval_fo3(const FiniteModel& m, const FoPtr& f, const std::map<std::string, int>& env) {
  auto lookup = [&](const std::string& v) {
    auto it = env.find(v);
    if (it == env.end()) throw TypeError("unbound variable in evaluation: " + v);
    return it->second;
  };
  switch (f->kind) {
    case FoKind::Atom: {
      auto it = m.relations.find(f->pred);
      if (it == m.relations.end()) throw TypeError("model has no relation for " + f->pred);
      return it->second.count({lookup(f->v1), lookup(f->v2)}) != 0;
    }
    case FoKind::Equals:
      return lookup(f->v1) == lookup(f->v2);
    case FoKind::Truth:
      return true;
    case FoKind::Falsehood:
      return false;
    case FoKind::Or:
      return eval_fo3(m, f->lhs, env) || eval_fo3(m, f->rhs, env);
    case FoKind::And:
      return eval_fo3(m, f->lhs, env) && eval_fo3(m, f->rhs, env);
    case FoKind::Not:
      return !eval_fo3(m, f->lhs, env);
    case FoKind::Exists:
    case FoKind::Forall: {
      int k = m.card(f->sort);
      std::map<std::string, int> env2 = env;
      for (int w = 0; w < k; ++w) {
        env2[f->var] = w;
        bool v = eval_fo3(m, f->lhs, env2);
        if (f->kind == FoKind::Exists && v) return true;
        if (f->kind == FoKind::Forall && !v) return false;
      }
      return f->kind == FoKind::Forall;
    }
  }
  return false;
}

std::set<std::pair<int, int>> eval_ra(const FiniteModel& m, const RaPtr& e) {
  auto [s1, s2] = type_of(e);
  int n1 = m.card(s1), n2 = m.card(s2);
  std::set<std::pair<int, int>> out;
  switch (e->kind) {
    case RaKind::Atom: {
      auto it = m.relations.find(e->name);
      if (it == m.relations.end()) throw TypeError("model has no relation for " + e->name);
      return it->second;
    }
    case RaKind::Top:
      for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) out.insert({a, b});
      return out;
    case RaKind::Bot:
      return out;
    case RaKind::Id:
      for (int a = 0; a < std::min(n1, n2); ++a) out.insert({a, a});
      return out;
    case RaKind::Union: {
      out = eval_ra(m, e->lhs);
      auto r = eval_ra(m, e->rhs);
      out.insert(r.begin(), r.end());
      return out;
    }
    case RaKind::Inter: {
      auto l = eval_ra(m, e->lhs);
      auto r = eval_ra(m, e->rhs);
      std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                            std::inserter(out, out.begin()));
      return out;
    }
    case RaKind::Compose: {
      auto l = eval_ra(m, e->lhs);
      auto r = eval_ra(m, e->rhs);
      for (const auto& [a, z] : l)
        for (const auto& [z2, b] : r)
          if (z == z2) out.insert({a, b});
      return out;
    }
    case RaKind::Dagger: {
      auto l = eval_ra(m, e->lhs);
      auto r = eval_ra(m, e->rhs);
      int mid = m.card(type_of(e->lhs).second);
      for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
          bool all = true;
          for (int z = 0; z < mid && all; ++z)
            all = l.count({a, z}) || r.count({z, b});
          if (all) out.insert({a, b});
        }
      return out;
    }
    case RaKind::Complement: {
      auto l = eval_ra(m, e->lhs);
      for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
          if (!l.count({a, b})) out.insert({a, b});
      return out;
    }
    case RaKind::Converse: {
      for (const auto& [b, a] : eval_ra(m, e->lhs)) out.insert({a, b});
      return out;
    }
  }
  return out;
}

bool ra_holds(const FiniteModel& m, const RaPtr& e) {
  auto [s1, s2] = type_of(e);
  return static_cast<int>(eval_ra(m, e).size()) == m.card(s1) * m.card(s2);
}

// ---------------------------------------------------------------------------
// Packed models: cardinalities <= 4, relations as bit masks (bit a*n2+b).

namespace {

constexpr int kMaxCard = 4;

struct PackedSig {
  std::vector<Sort> sorts;
  struct Pred {
    std::string name;
    int s1, s2;
  };
  std::vector<Pred> preds;

  int sort_index(const Sort& s) const {
    for (size_t i = 0; i < sorts.size(); ++i)
      if (sorts[i] == s) return static_cast<int>(i);
    return -1;
  }
  int add_sort(const Sort& s) {
    int i = sort_index(s);
    if (i >= 0) return i;
    sorts.push_back(s);
    return static_cast<int>(sorts.size()) - 1;
  }
  int pred_index(const std::string& n) const {
    for (size_t i = 0; i < preds.size(); ++i)
      if (preds[i].name == n) return static_cast<int>(i);
    return -1;
  }
};

struct PackedModel {
  std::vector<int> card;       // per sort
  std::vector<uint32_t> rel;   // per pred
};

FiniteModel unpack(const PackedSig& sig, const PackedModel& m) {
  FiniteModel out;
  for (size_t i = 0; i < sig.sorts.size(); ++i) out.carriers.push_back({sig.sorts[i], m.card[i]});
  for (size_t p = 0; p < sig.preds.size(); ++p) {
    int n2 = m.card[sig.preds[p].s2];
    int n1 = m.card[sig.preds[p].s1];
    auto& table = out.relations[sig.preds[p].name];
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b)
        if (m.rel[p] >> (a * n2 + b) & 1) table.insert({a, b});
  }
  return out;
}

// --- compiled RA evaluation -------------------------------------------------

struct RaProg {
  struct Op {
    RaKind kind;
    int pred = -1;      // Atom
    int s1 = -1, s2 = -1;  // leaf sorts; for binary ops s1 = mid sort of Dagger
    int a = -1, b = -1;    // child op indices
  };
  std::vector<Op> ops;  // postorder; result is ops.back()
};

int compile_ra_rec(const RaPtr& e, PackedSig& sig, RaProg& prog, bool grow_sig) {
  RaProg::Op op;
  op.kind = e->kind;
  auto sort_of = [&](const Sort& s) {
    int i = grow_sig ? sig.add_sort(s) : sig.sort_index(s);
    if (i < 0) throw TypeError("sort not in oracle signature: " + s);
    return i;
  };
  switch (e->kind) {
    case RaKind::Atom: {
      int s1 = sort_of(e->t1), s2 = sort_of(e->t2);
      int p = sig.pred_index(e->name);
      if (p < 0) {
        if (!grow_sig) throw TypeError("predicate not in oracle signature: " + e->name);
        sig.preds.push_back({e->name, s1, s2});
        p = static_cast<int>(sig.preds.size()) - 1;
      } else if (sig.preds[p].s1 != s1 || sig.preds[p].s2 != s2) {
        throw TypeError("inconsistent typing of " + e->name + " across oracle inputs");
      }
      op.pred = p;
      op.s1 = s1;
      op.s2 = s2;
      break;
    }
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      op.s1 = sort_of(e->t1);
      op.s2 = sort_of(e->t2);
      break;
    case RaKind::Union:
    case RaKind::Inter:
    case RaKind::Compose:
    case RaKind::Dagger:
      op.a = compile_ra_rec(e->lhs, sig, prog, grow_sig);
      op.b = compile_ra_rec(e->rhs, sig, prog, grow_sig);
      break;
    case RaKind::Complement:
    case RaKind::Converse:
      op.a = compile_ra_rec(e->lhs, sig, prog, grow_sig);
      break;
  }
  prog.ops.push_back(op);
  return static_cast<int>(prog.ops.size()) - 1;
}

struct Rel {
  int n1, n2;
  uint32_t bits;
};

class RaEval {
 public:
  RaEval(const RaPtr& e, PackedSig& sig, bool grow_sig) {
    compile_ra_rec(e, sig, prog_, grow_sig);
    scratch_.resize(prog_.ops.size());
  }

  Rel eval(const PackedModel& m) {
    for (size_t i = 0; i < prog_.ops.size(); ++i) {
      const auto& op = prog_.ops[i];
      Rel r{};
      switch (op.kind) {
        case RaKind::Atom:
          r = {m.card[op.s1], m.card[op.s2], m.rel[op.pred]};
          break;
        case RaKind::Top:
          r = {m.card[op.s1], m.card[op.s2], 0};
          r.bits = full_mask(r.n1, r.n2);
          break;
        case RaKind::Bot:
          r = {m.card[op.s1], m.card[op.s2], 0};
          break;
        case RaKind::Id: {
          r = {m.card[op.s1], m.card[op.s2], 0};
          for (int a = 0; a < std::min(r.n1, r.n2); ++a) r.bits |= 1u << (a * r.n2 + a);
          break;
        }
        case RaKind::Union: {
          r = scratch_[op.a];
          r.bits |= scratch_[op.b].bits;
          break;
        }
        case RaKind::Inter: {
          r = scratch_[op.a];
          r.bits &= scratch_[op.b].bits;
          break;
        }
        case RaKind::Compose: {
          const Rel& l = scratch_[op.a];
          const Rel& rr = scratch_[op.b];
          r = {l.n1, rr.n2, 0};
          for (int a = 0; a < l.n1; ++a)
            for (int z = 0; z < l.n2; ++z)
              if (l.bits >> (a * l.n2 + z) & 1)
                for (int b = 0; b < rr.n2; ++b)
                  if (rr.bits >> (z * rr.n2 + b) & 1) r.bits |= 1u << (a * rr.n2 + b);
          break;
        }
        case RaKind::Dagger: {
          const Rel& l = scratch_[op.a];
          const Rel& rr = scratch_[op.b];
          r = {l.n1, rr.n2, 0};
          for (int a = 0; a < l.n1; ++a)
            for (int b = 0; b < rr.n2; ++b) {
              bool all = true;
              for (int z = 0; z < l.n2 && all; ++z)
                all = (l.bits >> (a * l.n2 + z) & 1) || (rr.bits >> (z * rr.n2 + b) & 1);
              if (all) r.bits |= 1u << (a * rr.n2 + b);
            }
          break;
        }
        case RaKind::Complement: {
          r = scratch_[op.a];
          r.bits = full_mask(r.n1, r.n2) & ~r.bits;
          break;
        }
        case RaKind::Converse: {
          const Rel& l = scratch_[op.a];
          r = {l.n2, l.n1, 0};
          for (int a = 0; a < l.n1; ++a)
            for (int b = 0; b < l.n2; ++b)
              if (l.bits >> (a * l.n2 + b) & 1) r.bits |= 1u << (b * r.n2 + a);
          break;
        }
      }
      scratch_[i] = r;
    }
    return scratch_.back();
  }

 private:
  static uint32_t full_mask(int n1, int n2) {
    int bits = n1 * n2;
    return bits >= 32 ? 0xffffffffu : (1u << bits) - 1;
  }

  RaProg prog_;
  std::vector<Rel> scratch_;
};

// --- compiled FO3 evaluation ------------------------------------------------
// Truth masks over assignments to at most three variable slots; assignment
// index = v0 | v1<<2 | v2<<4 (stride 4 = max cardinality).

class FoEval {
 public:
  // Returns nullptr-equivalent (ok() false) when the formula uses more than
  // three distinct variable names; callers then fall back to eval_fo3.
  FoEval(const FoPtr& f, PackedSig& sig, std::vector<std::string>& slots, bool grow_sig) {
    ok_ = compile(f, sig, slots, grow_sig) >= 0;
    nvars_ = static_cast<int>(slots.size());
    if (nvars_ > 3) ok_ = false;
    scratch_.resize(prog_.size());
  }

  bool ok() const { return ok_; }

  bool eval(const PackedModel& m) {
    int space = 1 << (2 * nvars_);
    uint64_t full = space >= 64 ? ~0ull : (1ull << space) - 1;
    for (size_t i = 0; i < prog_.size(); ++i) {
      const Op& op = prog_[i];
      uint64_t r = 0;
      switch (op.kind) {
        case FoKind::Truth:
          r = full;
          break;
        case FoKind::Falsehood:
          r = 0;
          break;
        case FoKind::Equals: {
          for (int idx = 0; idx < space; ++idx)
            if ((idx >> (2 * op.v1) & 3) == (idx >> (2 * op.v2) & 3)) r |= 1ull << idx;
          break;
        }
        case FoKind::Atom: {
          const auto& pr = sig_->preds[op.pred];
          int n1 = m.card[pr.s1], n2 = m.card[pr.s2];
          uint32_t rel = m.rel[op.pred];
          for (int idx = 0; idx < space; ++idx) {
            int a = idx >> (2 * op.v1) & 3;
            int b = idx >> (2 * op.v2) & 3;
            if (a < n1 && b < n2 && (rel >> (a * n2 + b) & 1)) r |= 1ull << idx;
          }
          break;
        }
        case FoKind::Or:
          r = scratch_[op.a] | scratch_[op.b];
          break;
        case FoKind::And:
          r = scratch_[op.a] & scratch_[op.b];
          break;
        case FoKind::Not:
          r = full & ~scratch_[op.a];
          break;
        case FoKind::Exists:
        case FoKind::Forall: {
          int k = m.card[op.sort];
          int shift = 2 * op.var;
          uint64_t child = scratch_[op.a];
          for (int base = 0; base < space; ++base) {
            if (base >> shift & 3) continue;  // visit each slice once
            bool v = op.kind == FoKind::Forall;
            for (int w = 0; w < k; ++w) {
              bool bit = child >> (base | w << shift) & 1;
              v = op.kind == FoKind::Exists ? (v || bit) : (v && bit);
            }
            if (v)
              for (int w = 0; w < 4; ++w) {
                int idx = base | w << shift;
                if (idx < space) r |= 1ull << idx;
              }
          }
          break;
        }
      }
      scratch_[i] = r;
    }
    return scratch_.back() & 1;
  }

 private:
  struct Op {
    FoKind kind;
    int pred = -1, v1 = -1, v2 = -1;  // Atom/Equals
    int var = -1, sort = -1;          // quantifiers
    int a = -1, b = -1;
  };

  int slot(const std::string& name, std::vector<std::string>& slots) {
    for (size_t i = 0; i < slots.size(); ++i)
      if (slots[i] == name) return static_cast<int>(i);
    if (slots.size() >= 3) return -1;
    slots.push_back(name);
    return static_cast<int>(slots.size()) - 1;
  }

  int compile(const FoPtr& f, PackedSig& sig, std::vector<std::string>& slots, bool grow) {
    sig_ = &sig;
    Op op;
    op.kind = f->kind;
    switch (f->kind) {
      case FoKind::Truth:
      case FoKind::Falsehood:
        break;
      case FoKind::Equals:
        op.v1 = slot(f->v1, slots);
        op.v2 = slot(f->v2, slots);
        if (op.v1 < 0 || op.v2 < 0) return -1;
        break;
      case FoKind::Atom: {
        op.v1 = slot(f->v1, slots);
        op.v2 = slot(f->v2, slots);
        if (op.v1 < 0 || op.v2 < 0) return -1;
        op.pred = sig.pred_index(f->pred);
        if (op.pred < 0) {
          if (!grow) throw TypeError("predicate not in oracle signature: " + f->pred);
          throw TypeError("atom predicate missing declared type: " + f->pred);
        }
        break;
      }
      case FoKind::Or:
      case FoKind::And:
        op.a = compile(f->lhs, sig, slots, grow);
        op.b = compile(f->rhs, sig, slots, grow);
        if (op.a < 0 || op.b < 0) return -1;
        break;
      case FoKind::Not:
        op.a = compile(f->lhs, sig, slots, grow);
        if (op.a < 0) return -1;
        break;
      case FoKind::Exists:
      case FoKind::Forall: {
        op.var = slot(f->var, slots);
        if (op.var < 0) return -1;
        op.sort = grow ? sig.add_sort(f->sort) : sig.sort_index(f->sort);
        if (op.sort < 0) throw TypeError("sort not in oracle signature: " + f->sort);
        op.a = compile(f->lhs, sig, slots, grow);
        if (op.a < 0) return -1;
        break;
      }
    }
    prog_.push_back(op);
    return static_cast<int>(prog_.size()) - 1;
  }

  bool ok_ = false;
  int nvars_ = 0;
  std::vector<Op> prog_;
  const PackedSig* sig_ = nullptr;
  std::vector<uint64_t> scratch_;
};

}  // namespace

// ---------------------------------------------------------------------------
// enumeration

namespace {

template <class Fn>
bool for_each_packed(const PackedSig& sig, int min_max_card, int max_card, const Fn& fn) {
  size_t nsorts = sig.sorts.size();
  std::vector<int> card(nsorts, 1);
  PackedModel m;
  for (;;) {
    int maxc = 1;
    for (int c : card) maxc = std::max(maxc, c);
    if (maxc >= min_max_card) {
      m.card = card;
      m.rel.assign(sig.preds.size(), 0);
      std::vector<uint32_t> limit(sig.preds.size());
      for (size_t p = 0; p < sig.preds.size(); ++p)
        limit[p] = 1u << (card[sig.preds[p].s1] * card[sig.preds[p].s2]);
      for (;;) {
        if (!fn(m)) return false;
        size_t p = 0;
        while (p < m.rel.size()) {
          if (++m.rel[p] < limit[p]) break;
          m.rel[p] = 0;
          ++p;
        }
        if (p == m.rel.size()) break;
      }
    }
    size_t i = 0;
    while (i < nsorts) {
      if (++card[i] <= max_card) break;
      card[i] = 1;
      ++i;
    }
    if (i == nsorts) break;
    if (nsorts == 0) break;
  }
  return true;
}

unsigned long long count_packed(const PackedSig& sig, int min_max_card, int max_card) {
  size_t nsorts = sig.sorts.size();
  std::vector<int> card(nsorts, 1);
  unsigned long long total = 0;
  for (;;) {
    int maxc = 1;
    for (int c : card) maxc = std::max(maxc, c);
    if (maxc >= min_max_card) {
      unsigned long long prod = 1;
      for (const auto& p : sig.preds) {
        int bits = card[p.s1] * card[p.s2];
        if (bits >= 40) return ~0ull;
        prod *= 1ull << bits;
        if (prod > (1ull << 62)) return ~0ull;
      }
      total += prod;
      if (total > (1ull << 62)) return ~0ull;
    }
    size_t i = 0;
    while (i < nsorts) {
      if (++card[i] <= max_card) break;
      card[i] = 1;
      ++i;
    }
    if (i == nsorts || nsorts == 0) break;
  }
  return total;
}

PackedSig pack_signature(const Signature& sig) {
  PackedSig ps;
  for (const auto& s : sig.sorts()) ps.add_sort(s);
  for (const auto& [name, d] : sig.preds())
    ps.preds.push_back({name, ps.sort_index(d.first), ps.sort_index(d.second)});
  return ps;
}

// Distinguisher returns true when the model tells the two inputs apart.
Verdict run_oracle(const PackedSig& sig, const OracleBudget& budget,
                   const std::function<bool(const PackedModel&)>& distinguishes) {
  Verdict v{true, 0, false, std::nullopt};
  if (sig.sorts.empty()) {
    PackedModel m;
    m.rel.assign(sig.preds.size(), 0);
    if (distinguishes(m)) return {false, 0, false, unpack(sig, m)};
    return v;
  }
  auto probe = [&](const PackedModel& m) {
    if (distinguishes(m)) {
      v = {false, v.bound, v.sampled, unpack(sig, m)};
      return false;
    }
    return true;
  };
  if (!for_each_packed(sig, 1, budget.exhaustive_max_card, probe)) return v;
  v.bound = budget.exhaustive_max_card;
  if (!budget.stage2 || budget.stage2_card <= budget.exhaustive_max_card) return v;

  unsigned long long total =
      count_packed(sig, budget.exhaustive_max_card + 1, budget.stage2_card);
  if (total <= budget.stage2_exhaustive_limit) {
    if (!for_each_packed(sig, budget.exhaustive_max_card + 1, budget.stage2_card, probe)) return v;
    v.bound = budget.stage2_card;
    return v;
  }

  std::mt19937_64 rng(budget.seed * 0x9e3779b97f4a7c15ull + 0xc2b2ae3d27d4eb4full);
  int lo = budget.sample_min_card, hi = std::min(budget.sample_max_card, kMaxCard);
  PackedModel m;
  m.card.resize(sig.sorts.size());
  m.rel.resize(sig.preds.size());
  for (int i = 0; i < budget.samples; ++i) {
    for (auto& c : m.card) c = lo + static_cast<int>(rng() % (hi - lo + 1));
    for (size_t p = 0; p < sig.preds.size(); ++p) {
      int bits = m.card[sig.preds[p].s1] * m.card[sig.preds[p].s2];
      m.rel[p] = static_cast<uint32_t>(rng()) & ((bits >= 32 ? 0xffffffffu : (1u << bits) - 1));
    }
    v.sampled = true;
    if (!probe(m)) return v;
  }
  return v;
}

}  // namespace

void enumerate_models(const Signature& sig, int max_card,
                      const std::function<bool(const FiniteModel&)>& fn) {
  if (max_card < 1) throw TypeError("max_card must be >= 1");
  if (max_card > kMaxCard) throw TypeError("max_card above supported limit 4");
  PackedSig ps = pack_signature(sig);
  for_each_packed(ps, 1, max_card, [&](const PackedModel& m) { return fn(unpack(ps, m)); });
}

unsigned long long count_models(const Signature& sig, int max_card) {
  return count_packed(pack_signature(sig), 1, max_card);
}

// ---------------------------------------------------------------------------

namespace {

void used_preds(const FoPtr& f, std::set<std::string>& out) {
  if (f->kind == FoKind::Atom) out.insert(f->pred);
  if (f->lhs) used_preds(f->lhs, out);
  if (f->rhs) used_preds(f->rhs, out);
}

void used_sorts(const FoPtr& f, std::vector<Sort>& out) {
  if (is_quantifier(f->kind) && std::find(out.begin(), out.end(), f->sort) == out.end())
    out.push_back(f->sort);
  if (f->lhs) used_sorts(f->lhs, out);
  if (f->rhs) used_sorts(f->rhs, out);
}

}  // namespace

Verdict check_equiv_fo3(const FoPtr& f1, const FoPtr& f2, const Signature& sig,
                        const OracleBudget& budget) {
  // Restrict the oracle signature to what the formulas mention: unused sorts
  // and predicates cannot influence either truth value.
  std::set<std::string> preds;
  used_preds(f1, preds);
  used_preds(f2, preds);
  std::vector<Sort> sorts;
  used_sorts(f1, sorts);
  used_sorts(f2, sorts);

  PackedSig ps;
  for (const auto& s : sorts) ps.add_sort(s);
  for (const auto& p : preds) {
    const auto& d = sig.pred_type(p);
    ps.preds.push_back({p, ps.add_sort(d.first), ps.add_sort(d.second)});
  }

  std::vector<std::string> slots1, slots2;
  FoEval e1(f1, ps, slots1, false);
  FoEval e2(f2, ps, slots2, false);
  if (e1.ok() && e2.ok()) {
    return run_oracle(ps, budget,
                      [&](const PackedModel& m) { return e1.eval(m) != e2.eval(m); });
  }
  // More than three variable names: fall back to the reference evaluator.
  return run_oracle(ps, budget, [&](const PackedModel& m) {
    FiniteModel fm = unpack(ps, m);
    return eval_fo3(fm, f1, {}) != eval_fo3(fm, f2, {});
  });
}

Verdict check_equiv_ra(const RaPtr& e1, const RaPtr& e2, const OracleBudget& budget) {
  if (type_of(e1) != type_of(e2))
    throw TypeError("check_equiv_ra requires both sides to have the same type");
  PackedSig ps;
  RaEval a(e1, ps, true);
  RaEval b(e2, ps, true);
  return run_oracle(ps, budget, [&](const PackedModel& m) {
    Rel ra = a.eval(m);
    Rel rb = b.eval(m);
    return ra.bits != rb.bits;
  });
}

}  // namespace fo3ra
