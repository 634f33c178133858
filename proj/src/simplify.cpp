#include "fo3ra/simplify.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"

namespace fo3ra {

bool is_sort_var(const Sort& s) {
  return s == "P" || s == "Q" || s == "R" || s == "S";
}

namespace {

bool bind_sort(const Sort& ps, const Sort& es, Subst& out) {
  if (!is_sort_var(ps)) return ps == es;
  auto it = out.sorts.find(ps);
  if (it != out.sorts.end()) return it->second == es;
  out.sorts[ps] = es;
  return true;
}

Sort subst_sort(const Sort& ps, const Subst& s) {
  auto it = s.sorts.find(ps);
  return it == s.sorts.end() ? ps : it->second;
}

}  // namespace

bool match(const RaPtr& p, const RaPtr& e, Subst& out) {
  if (p->kind == RaKind::Atom && p->meta) {
    auto [e1, e2] = type_of(e);
    if (!bind_sort(p->t1, e1, out) || !bind_sort(p->t2, e2, out)) return false;
    auto it = out.vars.find(p->name);
    if (it != out.vars.end()) return equal(it->second, e);
    out.vars[p->name] = e;
    return true;
  }
  if (p->kind != e->kind) return false;
  switch (p->kind) {
    case RaKind::Atom:
      return p->name == e->name && bind_sort(p->t1, e->t1, out) && bind_sort(p->t2, e->t2, out);
    case RaKind::Top:
    case RaKind::Bot:
    case RaKind::Id:
      return bind_sort(p->t1, e->t1, out) && bind_sort(p->t2, e->t2, out);
    case RaKind::Complement:
    case RaKind::Converse:
      return match(p->lhs, e->lhs, out);
    default:
      return match(p->lhs, e->lhs, out) && match(p->rhs, e->rhs, out);
  }
}

RaPtr instantiate(const RaPtr& p, const Subst& s) {
  switch (p->kind) {
    case RaKind::Atom:
      if (p->meta) {
        auto it = s.vars.find(p->name);
        if (it == s.vars.end()) throw TypeError("unbound metavariable " + p->name);
        return it->second;
      }
      return ra_atom(p->name, subst_sort(p->t1, s), subst_sort(p->t2, s));
    case RaKind::Top:
      return ra_top(subst_sort(p->t1, s), subst_sort(p->t2, s));
    case RaKind::Bot:
      return ra_bot(subst_sort(p->t1, s), subst_sort(p->t2, s));
    case RaKind::Id:
      return ra_id2(subst_sort(p->t1, s), subst_sort(p->t2, s));
    case RaKind::Union:
      return ra_union(instantiate(p->lhs, s), instantiate(p->rhs, s));
    case RaKind::Inter:
      return ra_inter(instantiate(p->lhs, s), instantiate(p->rhs, s));
    case RaKind::Compose:
      return ra_compose(instantiate(p->lhs, s), instantiate(p->rhs, s));
    case RaKind::Dagger:
      return ra_dagger(instantiate(p->lhs, s), instantiate(p->rhs, s));
    case RaKind::Complement:
      return ra_complement(instantiate(p->lhs, s));
    case RaKind::Converse:
      return ra_converse(instantiate(p->lhs, s));
  }
  throw TypeError("unreachable pattern kind");
}

std::string rule_name(const RaPtr& lhs, const RaPtr& rhs) {
  return pretty_print(lhs) + " = " + pretty_print(rhs);
}

namespace {

// Collects leaf typings of a pattern into a signature, treating sort variables
// as concrete sorts; rejects inconsistent metavariable typings.
bool collect_pattern_sig(const RaPtr& p, Signature& sig, std::string& err) {
  if (!p->lhs) {
    for (const Sort& s : {p->t1, p->t2})
      if (!sig.has_sort(s)) sig.add_sort(s);
    if (p->kind == RaKind::Atom) {
      if (sig.has_pred(p->name)) {
        if (sig.pred_type(p->name) != std::make_pair(p->t1, p->t2)) {
          err = "metavariable " + p->name + " used at two different types";
          return false;
        }
      } else {
        sig.add_pred(p->name, p->t1, p->t2);
      }
    }
    return true;
  }
  if (!collect_pattern_sig(p->lhs, sig, err)) return false;
  return !p->rhs || collect_pattern_sig(p->rhs, sig, err);
}

}  // namespace

std::optional<std::string> rule_violation(const RewriteRule& r) {
  if (size(r.rhs) >= size(r.lhs)) return "rhs is not smaller than lhs";
  auto lc = metavar_counts(r.lhs);
  for (const auto& [v, n] : metavar_counts(r.rhs)) {
    auto it = lc.find(v);
    if (it == lc.end()) return "metavariable " + v + " occurs only in rhs";
    if (n > it->second) return "metavariable " + v + " occurs more often in rhs";
  }
  Signature sig;
  std::string err;
  if (!collect_pattern_sig(r.lhs, sig, err) || !collect_pattern_sig(r.rhs, sig, err)) return err;
  for (const RaPtr& side : {r.lhs, r.rhs}) {
    auto vs = check_well_typed_ra(side, sig);
    if (!vs.empty()) return vs[0].message;
  }
  if (type_of(r.lhs) != type_of(r.rhs)) return "lhs and rhs have different types";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Discrimination trie

namespace {

std::string node_token(const RaPtr& e) {
  switch (e->kind) {
    case RaKind::Atom:
      return e->meta ? "*" : "a:" + e->name;
    case RaKind::Top:
      return "top";
    case RaKind::Bot:
      return "bot";
    case RaKind::Id:
      return "id";
    case RaKind::Union:
      return "|";
    case RaKind::Inter:
      return "&";
    case RaKind::Compose:
      return ";";
    case RaKind::Dagger:
      return "+";
    case RaKind::Complement:
      return "~";
    case RaKind::Converse:
      return "^";
  }
  return "?";
}

void pattern_tokens(const RaPtr& p, std::vector<std::string>& out) {
  out.push_back(node_token(p));
  if (p->kind == RaKind::Atom && p->meta) return;
  if (p->lhs) pattern_tokens(p->lhs, out);
  if (p->rhs) pattern_tokens(p->rhs, out);
}

// token plus the index just past the node's subtree
void subject_tokens(const RaPtr& e, std::vector<std::pair<std::string, int>>& out) {
  size_t at = out.size();
  out.push_back({node_token(e), 0});
  if (e->lhs) subject_tokens(e->lhs, out);
  if (e->rhs) subject_tokens(e->rhs, out);
  out[at].second = static_cast<int>(out.size());
}

}  // namespace

Matcher::Matcher(RuleSet rules) : rules_(std::move(rules)) {
  trie_.emplace_back();
  std::map<std::string, int> seen;
  for (size_t r = 0; r < rules_.rules.size(); ++r) {
    const RewriteRule& rule = rules_.rules[r];
    if (auto v = rule_violation(rule)) throw TypeError("invalid rule `" + rule.name + "`: " + *v);
    if (!seen.emplace(rule.name, r).second)
      throw TypeError("duplicate rule `" + rule.name + "`");
    std::vector<std::string> toks;
    pattern_tokens(rule.lhs, toks);
    int node = 0;
    for (const auto& t : toks) {
      int next;
      if (t == "*") {
        if (trie_[node].wild < 0) {
          trie_[node].wild = static_cast<int>(trie_.size());
          trie_.emplace_back();
        }
        next = trie_[node].wild;
      } else {
        auto it = trie_[node].next.find(t);
        if (it == trie_[node].next.end()) {
          it = trie_[node].next.emplace(t, static_cast<int>(trie_.size())).first;
          trie_.emplace_back();
        }
        next = it->second;
      }
      node = next;
    }
    trie_[node].ends.push_back(static_cast<int>(r));
  }
}

std::optional<std::pair<RaPtr, const RewriteRule*>> Matcher::match_root(const RaPtr& e) const {
  if (rules_.rules.empty()) return std::nullopt;
  std::vector<std::pair<std::string, int>> toks;
  subject_tokens(e, toks);
  std::vector<int> hits;
  // walk the trie; a wildcard edge skips a whole subject subtree
  auto walk = [&](auto&& self, int node, int i) -> void {
    if (i == static_cast<int>(toks.size())) {
      hits.insert(hits.end(), trie_[node].ends.begin(), trie_[node].ends.end());
      return;
    }
    if (trie_[node].wild >= 0) self(self, trie_[node].wild, toks[i].second);
    auto it = trie_[node].next.find(toks[i].first);
    if (it != trie_[node].next.end()) self(self, it->second, i + 1);
  };
  walk(walk, 0, 0);
  std::sort(hits.begin(), hits.end());
  for (int r : hits) {
    const RewriteRule& rule = rules_.rules[r];
    Subst s;
    if (match(rule.lhs, e, s)) return {{instantiate(rule.rhs, s), &rule}};
  }
  return std::nullopt;
}

std::optional<std::pair<RaPtr, const RewriteRule*>> match_root_naive(const RaPtr& e,
                                                                     const RuleSet& rules) {
  for (const RewriteRule& rule : rules.rules) {
    Subst s;
    if (match(rule.lhs, e, s)) return {{instantiate(rule.rhs, s), &rule}};
  }
  return std::nullopt;
}

namespace {

RaPtr replace_at(const RaPtr& e, const std::vector<int>& path, size_t depth, const RaPtr& repl) {
  if (depth == path.size()) return repl;
  auto copy = std::make_shared<RaExpr>(*e);
  if (path[depth] == 0)
    copy->lhs = replace_at(e->lhs, path, depth + 1, repl);
  else
    copy->rhs = replace_at(e->rhs, path, depth + 1, repl);
  return copy;
}

}  // namespace

std::optional<std::pair<RaPtr, std::string>> rewrite_once(const RaPtr& e, const Matcher& m) {
  std::deque<std::pair<RaPtr, std::vector<int>>> queue{{e, {}}};
  while (!queue.empty()) {
    auto [n, path] = queue.front();
    queue.pop_front();
    if (auto hit = m.match_root(n))
      return {{replace_at(e, path, 0, hit->first), hit->second->name}};
    if (n->lhs) {
      auto p = path;
      p.push_back(0);
      queue.push_back({n->lhs, p});
    }
    if (n->rhs) {
      auto p = path;
      p.push_back(1);
      queue.push_back({n->rhs, p});
    }
  }
  return std::nullopt;
}

std::pair<RaPtr, std::vector<std::string>> simplify_full(const RaPtr& e, const Matcher& m) {
  RaPtr cur = e;
  std::vector<std::string> trace;
  while (auto step = rewrite_once(cur, m)) {
    cur = step->first;
    trace.push_back(step->second);
  }
  return {cur, trace};
}

std::pair<RaPtr, std::vector<std::string>> simplify_full(const RaPtr& e, const RuleSet& rules) {
  return simplify_full(e, Matcher(rules));
}

// ---------------------------------------------------------------------------
// Rule files

RuleSet parse_rules(const std::string& text, Mode mode) {
  RuleSet out;
  out.mode = mode;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("=>");
    if (arrow == std::string::npos)
      throw SourceError(lineno, 1, "rule line is missing `=>`");
    RewriteRule r;
    r.mode = mode;
    try {
      r.lhs = parse_ra_pattern(line.substr(0, arrow), mode);
      r.rhs = parse_ra_pattern(line.substr(arrow + 2), mode);
    } catch (const SourceError& e) {
      throw SourceError(lineno, e.column, e.message, e.expected);
    }
    r.name = rule_name(r.lhs, r.rhs);
    if (auto v = rule_violation(r))
      throw SourceError(lineno, 1, "invalid rule `" + r.name + "`: " + *v);
    out.rules.push_back(std::move(r));
  }
  return out;
}

RuleSet load_rules(const std::string& path, Mode mode) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rules(buf.str(), mode);
}

std::string render_rules(const RuleSet& rules) {
  std::string out;
  for (const RewriteRule& r : rules.rules)
    out += pretty_print(r.lhs) + " => " + pretty_print(r.rhs) + "\n";
  return out;
}

void save_rules(const RuleSet& rules, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write rule file: " + path);
  out << render_rules(rules);
}

}  // namespace fo3ra
