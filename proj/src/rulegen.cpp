#include "fo3ra/rulegen.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <ostream>

namespace fo3ra {

namespace {

const char* kMetaNames[] = {"A", "B", "C", "D"};

// All homogeneous patterns of a given size, canonical or not, in a fixed
// order: metavariables, top, bot, id at size 1; then ~, ^ over smaller
// patterns; then |, &, ;, + over all left/right size splits.
const std::vector<RaPtr>& all_patterns(int size, int max_metavars) {
  static std::map<std::pair<int, int>, std::vector<RaPtr>> cache;
  auto key = std::make_pair(size, max_metavars);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<RaPtr> out;
  if (size == 1) {
    for (int i = 0; i < max_metavars; ++i)
      out.push_back(ra_atom(kMetaNames[i], kUniverse, kUniverse, true));
    out.push_back(ra_top(kUniverse, kUniverse));
    out.push_back(ra_bot(kUniverse, kUniverse));
    out.push_back(ra_id(kUniverse));
  } else if (size >= 2) {
    for (const RaPtr& p : all_patterns(size - 1, max_metavars)) out.push_back(ra_complement(p));
    for (const RaPtr& p : all_patterns(size - 1, max_metavars)) out.push_back(ra_converse(p));
    for (auto* op : {&ra_union, &ra_inter, &ra_compose, &ra_dagger})
      for (int l = 1; l <= size - 2; ++l)
        for (const RaPtr& a : all_patterns(l, max_metavars))
          for (const RaPtr& b : all_patterns(size - 1 - l, max_metavars))
            out.push_back((*op)(a, b));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

void metavar_order(const RaPtr& p, std::vector<std::string>& out) {
  if (p->kind == RaKind::Atom && p->meta) {
    if (std::find(out.begin(), out.end(), p->name) == out.end()) out.push_back(p->name);
    return;
  }
  if (p->lhs) metavar_order(p->lhs, out);
  if (p->rhs) metavar_order(p->rhs, out);
}

bool is_canonical(const RaPtr& p) {
  std::vector<std::string> order;
  metavar_order(p, order);
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] != kMetaNames[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Semantic fingerprints over all homogeneous models of cardinality <= 2 with
// three relation symbols; equivalent patterns always hash alike, the oracle
// settles collisions.

struct FpModel {
  int n;
  uint8_t rel[3];  // bit a*n+b
};

const std::vector<FpModel>& fp_models() {
  static std::vector<FpModel> ms = [] {
    std::vector<FpModel> out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          out.push_back({1, {static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                             static_cast<uint8_t>(c)}});
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b)
        for (int c = 0; c < 16; ++c)
          out.push_back({2, {static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                             static_cast<uint8_t>(c)}});
    return out;
  }();
  return ms;
}

uint8_t fp_full(int n) { return n == 1 ? 0x1 : 0xF; }

uint8_t fp_eval(const RaPtr& e, const FpModel& m) {
  switch (e->kind) {
    case RaKind::Atom:
      return m.rel[(e->name[0] - 'A') % 3];
    case RaKind::Top:
      return fp_full(m.n);
    case RaKind::Bot:
      return 0;
    case RaKind::Id:
      return m.n == 1 ? 0x1 : 0x9;
    case RaKind::Union:
      return fp_eval(e->lhs, m) | fp_eval(e->rhs, m);
    case RaKind::Inter:
      return fp_eval(e->lhs, m) & fp_eval(e->rhs, m);
    case RaKind::Complement:
      return fp_full(m.n) & ~fp_eval(e->lhs, m);
    case RaKind::Converse: {
      uint8_t v = fp_eval(e->lhs, m);
      if (m.n == 1) return v;
      return (v & 0x9) | ((v & 0x2) << 1) | ((v & 0x4) >> 1);
    }
    case RaKind::Compose: {
      uint8_t l = fp_eval(e->lhs, m), r = fp_eval(e->rhs, m), out = 0;
      for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
          for (int z = 0; z < m.n; ++z)
            if ((l >> (a * m.n + z) & 1) && (r >> (z * m.n + b) & 1)) out |= 1 << (a * m.n + b);
      return out;
    }
    case RaKind::Dagger: {
      uint8_t l = fp_eval(e->lhs, m), r = fp_eval(e->rhs, m), out = 0;
      for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b) {
          bool all = true;
          for (int z = 0; z < m.n && all; ++z)
            all = (l >> (a * m.n + z) & 1) || (r >> (z * m.n + b) & 1);
          if (all) out |= 1 << (a * m.n + b);
        }
      return out;
    }
  }
  return 0;
}

uint64_t fingerprint(const RaPtr& p) {
  uint64_t h = 1469598103934665603ull;
  for (const FpModel& m : fp_models()) {
    h ^= fp_eval(p, m);
    h *= 1099511628211ull;
  }
  return h;
}

bool multiplicity_ok(const std::map<std::string, int>& lhs, const RaPtr& rhs) {
  for (const auto& [v, n] : metavar_counts(rhs)) {
    auto it = lhs.find(v);
    if (it == lhs.end() || n > it->second) return false;
  }
  return true;
}

bool reducible(const RaPtr& p, const Matcher& m) {
  return rewrite_once(p, m).has_value();
}

}  // namespace

std::vector<RaPtr> enumerate_patterns(int size, int max_metavars) {
  if (size < 1) return {};
  std::vector<RaPtr> out;
  for (const RaPtr& p : all_patterns(size, max_metavars))
    if (is_canonical(p)) out.push_back(p);
  return out;
}

std::vector<std::pair<RaPtr, RaPtr>> candidate_pairs(int n, const MinerConfig& cfg,
                                                     const RuleSet& earlier) {
  Matcher m(earlier);
  std::vector<std::pair<RaPtr, RaPtr>> out;
  for (const RaPtr& lhs : enumerate_patterns(n, cfg.max_metavars)) {
    if (reducible(lhs, m)) continue;
    auto counts = metavar_counts(lhs);
    for (int sz = 1; sz < n; ++sz)
      for (const RaPtr& rhs : all_patterns(sz, cfg.max_metavars)) {
        if (!multiplicity_ok(counts, rhs)) continue;
        if (reducible(rhs, m)) continue;
        out.push_back({lhs, rhs});
      }
  }
  return out;
}

RuleSet mine(const MinerConfig& cfg, std::ostream* progress) {
  if (cfg.max_lhs_size < 2) throw TypeError("max_lhs_size must be >= 2");
  if (cfg.max_metavars < 1 || cfg.max_metavars > 4)
    throw TypeError("max_metavars must be between 1 and 4");

  RuleSet rules;
  rules.mode = Mode::Hom;
  int start = 2;
  if (!cfg.out_path.empty() && std::filesystem::exists(cfg.out_path)) {
    rules = load_rules(cfg.out_path, Mode::Hom);
    for (const RewriteRule& r : rules.rules) start = std::max(start, size(r.lhs) + 1);
  }

  // rhs pool with fingerprints, bucketed; sizes 1 .. max_lhs_size-1
  struct PoolEntry {
    RaPtr p;
    std::map<std::string, int> counts;
  };
  std::vector<std::vector<PoolEntry>> pool(cfg.max_lhs_size);
  std::map<uint64_t, std::vector<std::pair<int, int>>> buckets;  // fp -> (size, index)
  for (int sz = 1; sz < cfg.max_lhs_size; ++sz)
    for (const RaPtr& p : all_patterns(sz, cfg.max_metavars)) {
      buckets[fingerprint(p)].push_back({sz, static_cast<int>(pool[sz].size())});
      pool[sz].push_back({p, metavar_counts(p)});
    }

  Matcher matcher(rules);
  for (int n = start; n <= cfg.max_lhs_size; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    long candidates = 0;
    size_t accepted0 = rules.rules.size();
    for (const RaPtr& lhs : enumerate_patterns(n, cfg.max_metavars)) {
      if (reducible(lhs, matcher)) continue;
      auto counts = metavar_counts(lhs);
      auto bucket = buckets.find(fingerprint(lhs));
      if (bucket == buckets.end()) continue;
      for (const auto& [sz, idx] : bucket->second) {
        if (sz >= n) continue;
        const PoolEntry& cand = pool[sz][idx];
        if (!multiplicity_ok(counts, cand.p)) continue;
        if (reducible(cand.p, matcher)) continue;
        ++candidates;
        if (!check_equiv_ra(lhs, cand.p, cfg.budget).valid) continue;
        rules.rules.push_back({rule_name(lhs, cand.p), lhs, cand.p, Mode::Hom});
        matcher = Matcher(rules);
        break;
      }
    }
    if (progress) {
      auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      *progress << "size=" << n << " candidates=" << candidates
                << " accepted=" << rules.rules.size() - accepted0 << " elapsed=" << dt << "ms\n";
    }
    if (!cfg.out_path.empty()) save_rules(rules, cfg.out_path);
  }
  return rules;
}

RuleSet redundancy_filter(const RuleSet& rules) {
  RuleSet out;
  out.mode = rules.mode;
  for (const RewriteRule& r : rules.rules) {
    Matcher prefix(out);
    RaPtr l = simplify_full(r.lhs, prefix).first;
    RaPtr rr = simplify_full(r.rhs, prefix).first;
    if (equal(l, rr)) continue;
    out.rules.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heterogeneous lifting

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Returns the (d1, d2) slot classes of the pattern; records each leaf's two
// slot ids in traversal order.
std::pair<int, int> collect_slots(const RaPtr& p, UnionFind& uf,
                                  std::map<std::string, std::pair<int, int>>& metas,
                                  std::vector<int>& leaf_slots) {
  if (!p->lhs) {
    int s1 = uf.make(), s2 = uf.make();
    if (p->kind == RaKind::Atom) {
      auto it = metas.find(p->name);
      if (it != metas.end()) {
        uf.unite(s1, it->second.first);
        uf.unite(s2, it->second.second);
      } else {
        metas[p->name] = {s1, s2};
      }
    }
    leaf_slots.push_back(s1);
    leaf_slots.push_back(s2);
    return {s1, s2};
  }
  auto l = collect_slots(p->lhs, uf, metas, leaf_slots);
  switch (p->kind) {
    case RaKind::Complement:
      return l;
    case RaKind::Converse:
      return {l.second, l.first};
    case RaKind::Union:
    case RaKind::Inter: {
      auto r = collect_slots(p->rhs, uf, metas, leaf_slots);
      uf.unite(l.first, r.first);
      uf.unite(l.second, r.second);
      return l;
    }
    case RaKind::Compose:
    case RaKind::Dagger: {
      auto r = collect_slots(p->rhs, uf, metas, leaf_slots);
      uf.unite(l.second, r.first);
      return {l.first, r.second};
    }
    default:
      throw TypeError("unexpected leaf kind");
  }
}

RaPtr retype(const RaPtr& p, const std::vector<Sort>& sorts, size_t& at) {
  if (!p->lhs) {
    Sort t1 = sorts[at++];
    Sort t2 = sorts[at++];
    switch (p->kind) {
      case RaKind::Atom:
        return ra_atom(p->name, t1, t2, p->meta);
      case RaKind::Top:
        return ra_top(t1, t2);
      case RaKind::Bot:
        return ra_bot(t1, t2);
      default:
        return ra_id2(t1, t2);
    }
  }
  RaPtr l = retype(p->lhs, sorts, at);
  if (!p->rhs) return p->kind == RaKind::Complement ? ra_complement(l) : ra_converse(l);
  RaPtr r = retype(p->rhs, sorts, at);
  switch (p->kind) {
    case RaKind::Union:
      return ra_union(l, r);
    case RaKind::Inter:
      return ra_inter(l, r);
    case RaKind::Compose:
      return ra_compose(l, r);
    default:
      return ra_dagger(l, r);
  }
}

// restricted growth strings = set partitions, block ids by first occurrence
void partitions(int k, std::vector<std::vector<int>>& out) {
  std::vector<int> rgs(k, 0);
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == k) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= maxb + 1 && b < 4; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  if (k > 0) rec(rec, 0, -1);
}

}  // namespace

RuleSet lift_heterogeneous(const RuleSet& hom_rules, const OracleBudget& budget,
                           std::ostream* progress) {
  const char* kSortNames[] = {"P", "Q", "R", "S"};
  RuleSet out;
  out.mode = Mode::Het;
  for (const RewriteRule& rule : hom_rules.rules) {
    UnionFind uf;
    std::map<std::string, std::pair<int, int>> metas;
    std::vector<int> leaf_slots;
    auto lt = collect_slots(rule.lhs, uf, metas, leaf_slots);
    auto rt = collect_slots(rule.rhs, uf, metas, leaf_slots);
    uf.unite(lt.first, rt.first);
    uf.unite(lt.second, rt.second);

    // base classes indexed by first appearance across the leaf slots
    std::map<int, int> base;
    std::vector<int> slot_base(leaf_slots.size());
    for (size_t i = 0; i < leaf_slots.size(); ++i) {
      int root = uf.find(leaf_slots[i]);
      auto it = base.find(root);
      if (it == base.end()) it = base.emplace(root, static_cast<int>(base.size())).first;
      slot_base[i] = it->second;
    }
    int k = static_cast<int>(base.size());

    std::vector<std::vector<int>> parts;
    partitions(k, parts);
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
    });

    int emitted = 0;
    for (const auto& rgs : parts) {
      std::vector<Sort> sorts(leaf_slots.size());
      for (size_t i = 0; i < leaf_slots.size(); ++i) sorts[i] = kSortNames[rgs[slot_base[i]]];
      size_t at = 0;
      RaPtr lhs = retype(rule.lhs, sorts, at);
      RaPtr rhs = retype(rule.rhs, sorts, at);
      RewriteRule het{rule_name(lhs, rhs), lhs, rhs, Mode::Het};
      if (rule_violation(het)) continue;
      if (!check_equiv_ra(lhs, rhs, budget).valid) continue;
      out.rules.push_back(std::move(het));
      ++emitted;
    }
    if (progress) *progress << "lifted `" << rule.name << "` typings=" << emitted << "\n";
  }
  return redundancy_filter(out);
}

}  // namespace fo3ra
