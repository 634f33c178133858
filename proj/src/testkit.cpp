#include "fo3ra/testkit.hpp"

#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "fo3ra/backtranslate.hpp"
#include "fo3ra/pretty.hpp"

namespace fo3ra {

Signature default_signature(Mode mode) {
  Signature s;
  if (mode == Mode::Hom) {
    s.add_sort(kUniverse);
    s.add_pred("a", kUniverse, kUniverse);
    s.add_pred("b", kUniverse, kUniverse);
    s.add_pred("c", kUniverse, kUniverse);
  } else {
    for (const char* t : {"P", "Q", "R", "Left", "Right"}) s.add_sort(t);
    s.add_pred("a", "P", "Q");
    s.add_pred("b", "Q", "R");
    s.add_pred("c", "P", "P");
  }
  return s;
}

namespace {

const char* kVarNames[] = {"x", "y", "z"};

void validate(const FuzzConfig& cfg) {
  if (cfg.count < 1) throw TypeError("count must be >= 1");
  if (cfg.target_size < 2) throw TypeError("target_size must be >= 2");
}

class Gen {
 public:
  Gen(const Signature& sig, unsigned long long seed, int index) : sig_(sig) {
    unsigned long long s = seed * 0x9e3779b97f4a7c15ull + (unsigned long long)index;
    s ^= s >> 31;
    rng_.seed(s * 0xbf58476d1ce4e5b9ull + 1);
    for (const auto& [name, type] : sig.preds()) {
      preds_.push_back(name);
      qsorts_.insert(type.first);
      qsorts_.insert(type.second);
    }
  }

  FoPtr gen(int n, std::vector<std::pair<std::string, Sort>>& scope) {
    if (n <= 1) return leaf(scope);
    // 0 = not, 1 = and, 2 = or, 3 = exists, 4 = forall; quantifiers get extra
    // weight so small budgets still bind variables
    std::vector<int> choices{0};
    if (n >= 3) {
      choices.push_back(1);
      choices.push_back(2);
    }
    int qweight = scope.empty() ? 4 : 2;
    for (int i = 0; i < qweight; ++i) {
      choices.push_back(3);
      choices.push_back(4);
    }
    switch (choices[pick(choices.size())]) {
      case 0:
        return fo_not(gen(n - 1, scope));
      case 1:
      case 2: {
        int l = 1 + (int)pick((size_t)(n - 2));
        FoPtr a = gen(l, scope);
        FoPtr b = gen(n - 1 - l, scope);
        return rng_() % 2 ? fo_and(a, b) : fo_or(a, b);
      }
      default: {
        std::string v = kVarNames[pick(3)];
        Sort s = *std::next(qsorts_.begin(), (long)pick(qsorts_.size()));
        scope.push_back({v, s});
        FoPtr body = gen(n - 1, scope);
        scope.pop_back();
        return rng_() % 2 ? fo_exists(v, s, body) : fo_forall(v, s, body);
      }
    }
  }

 private:
  size_t pick(size_t n) { return (size_t)(rng_() % n); }

  FoPtr leaf(const std::vector<std::pair<std::string, Sort>>& scope) {
    std::map<std::string, Sort> vars;  // inner binding wins
    for (const auto& [name, sort] : scope) vars[name] = sort;
    std::vector<FoPtr> opts;
    for (const std::string& p : preds_) {
      const auto& [d1, d2] = sig_.pred_type(p);
      for (const auto& [v1, s1] : vars)
        for (const auto& [v2, s2] : vars)
          if (s1 == d1 && s2 == d2) opts.push_back(fo_atom(p, v1, v2));
    }
    for (const auto& [v1, s1] : vars)
      for (const auto& [v2, s2] : vars)
        if (s1 == s2) opts.push_back(fo_equals(v1, v2));
    opts.push_back(fo_truth());
    opts.push_back(fo_falsehood());
    return opts[pick(opts.size())];
  }

  const Signature& sig_;
  std::mt19937_64 rng_;
  std::vector<std::string> preds_;
  std::set<Sort> qsorts_;
};

}  // namespace

FoPtr random_fo3(const FuzzConfig& cfg, int index) {
  validate(cfg);
  Gen g(cfg.sig, cfg.seed, index);
  std::vector<std::pair<std::string, Sort>> scope;
  return g.gen(cfg.target_size, scope);
}

RoundTripReport round_trip(const FoPtr& f, const FuzzConfig& cfg) {
  RoundTripReport r;
  const RuleSet* rules = cfg.simplify && !cfg.rules.rules.empty() ? &cfg.rules : nullptr;
  try {
    r.trace = translate(f, cfg.sig, cfg.mode, rules);
  } catch (const std::exception& e) {
    r.stage = "translate";
    r.error = e.what();
    return r;
  }
  r.raw_size = size(r.trace.raw);
  r.simplified_size = size(r.trace.simplified);
  FoPtr back;
  try {
    back = close(r.trace.simplified);
  } catch (const std::exception& e) {
    r.stage = "backtranslate";
    r.error = e.what();
    return r;
  }
  Verdict v;
  try {
    v = check_equiv_fo3(f, back, cfg.sig, cfg.budget);
  } catch (const std::exception& e) {
    r.stage = "oracle";
    r.error = e.what();
    return r;
  }
  r.valid = v.valid;
  if (!v.valid) {
    r.stage = "oracle";
    r.error = "counterexample found";
    r.counterexample = v.counterexample;
  }
  return r;
}

FuzzSummary fuzz(const FuzzConfig& cfg, std::ostream* progress) {
  validate(cfg);
  FuzzSummary s;
  for (int i = 0; i < cfg.count; ++i) {
    FoPtr f = random_fo3(cfg, i);
    RoundTripReport r = round_trip(f, cfg);
    if (r.valid) {
      ++s.passed;
    } else {
      ++s.failed;
      s.failures.push_back({i, r});
      if (progress) *progress << render_failure(i, f, r);
    }
    if (progress && (i + 1) % 200 == 0)
      *progress << "cases=" << i + 1 << " passed=" << s.passed << " failed=" << s.failed << "\n";
  }
  return s;
}

std::string render_failure(int index, const FoPtr& formula, const RoundTripReport& r) {
  std::ostringstream out;
  out << "case " << index << " FAILED at stage " << r.stage << "\n";
  out << "formula: " << pretty_print(formula) << "\n";
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  if (r.trace.raw) {
    out << "translation: " << pretty_print(r.trace.raw) << "\n";
    if (r.trace.simplified && !equal(r.trace.simplified, r.trace.raw))
      out << "simplified: " << pretty_print(r.trace.simplified) << "\n";
  }
  if (r.counterexample) out << "countermodel:\n" << r.counterexample->to_text();
  return out.str();
}

}  // namespace fo3ra
