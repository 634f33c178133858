#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "default_rules.hpp"
#include "fo3ra/backtranslate.hpp"
#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"
#include "fo3ra/rulegen.hpp"
#include "fo3ra/testkit.hpp"
#include "fo3ra/translate.hpp"

using namespace fo3ra;

namespace {

// `-` reads stdin; an existing path reads the file; anything else is taken as
// formula text directly.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Mode parse_mode(const std::string& s) {
  if (s == "hom") return Mode::Hom;
  if (s == "het") return Mode::Het;
  throw std::runtime_error("mode must be hom or het");
}

Signature load_sig(const std::string& path, Mode mode) {
  if (!path.empty()) return parse_signature(read_file(path));
  return mode == Mode::Hom ? Signature::homogeneous() : default_signature(Mode::Het);
}

RuleSet load_ruleset(const std::string& path, Mode mode) {
  if (!path.empty()) return load_rules(path, mode);
  return parse_rules(mode == Mode::Hom ? kDefaultHomRules : kDefaultHetRules, mode);
}

OracleBudget make_budget(int bound, int samples, unsigned long long seed) {
  OracleBudget b;
  b.exhaustive_max_card = bound;
  if (samples == 0)
    b.stage2 = false;
  else
    b.samples = samples;
  b.seed = seed;
  return b;
}

void print_source_error(const std::string& text, const SourceError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::istringstream in(text);
  std::string line;
  for (int i = 0; i < e.line && std::getline(in, line); ++i) {
  }
  if (!line.empty()) {
    std::cerr << line << "\n";
    std::cerr << std::string(e.column > 0 ? e.column - 1 : 0, ' ') << "^\n";
  }
}

enum class Lang { Auto, Fo3, Ra };

struct Parsed {
  Lang lang;
  FoPtr fo;
  RaPtr ra;
};

Parsed parse_any(const std::string& text, Lang lang, Signature& sig, Mode mode) {
  if (lang == Lang::Fo3) return {Lang::Fo3, parse_fo3(text, sig, mode), nullptr};
  if (lang == Lang::Ra) return {Lang::Ra, nullptr, parse_ra(text, sig, mode)};
  try {
    Signature probe = sig;
    RaPtr e = parse_ra(text, probe, mode);
    sig = probe;
    return {Lang::Ra, nullptr, e};
  } catch (const SourceError&) {
    return {Lang::Fo3, parse_fo3(text, sig, mode), nullptr};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FO3 <-> relation algebra translator and simplifier"};
  app.require_subcommand(1);

  std::string input = "-", input2, mode_s = "hom", sig_path, rules_path, out_path, lang_s = "auto";
  bool trace = false, no_simplify = false;
  int bound = 2, samples = 20000, count = 100, size_arg = 12, max_size = 5;
  unsigned long long seed = 0;

  auto add_io = [&](CLI::App* c, bool positional = true) {
    if (positional) c->add_option("input", input, "file, `-` for stdin, or literal text");
    c->add_option("--mode", mode_s, "hom | het")->check(CLI::IsMember({"hom", "het"}));
    c->add_option("--sig", sig_path, "signature file");
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--bound", bound, "exhaustive oracle cardinality bound");
    c->add_option("--samples", samples, "stage-2 sample count, 0 disables stage 2");
    c->add_option("--seed", seed, "oracle sampling seed");
  };

  CLI::App* c_translate = app.add_subcommand("translate", "FO3 -> RA");
  add_io(c_translate);
  c_translate->add_option("--rules", rules_path, "rewrite rule file");
  c_translate->add_flag("--trace", trace, "print the six-step report");
  c_translate->add_flag("--no-simplify", no_simplify, "skip the rewrite pass");

  CLI::App* c_back = app.add_subcommand("backtranslate", "RA -> closed FO3");
  add_io(c_back);

  CLI::App* c_simplify = app.add_subcommand("simplify", "rewrite an RA term to fixpoint");
  add_io(c_simplify);
  c_simplify->add_option("--rules", rules_path, "rewrite rule file");
  c_simplify->add_flag("--trace", trace, "print each rewrite step");

  CLI::App* c_check = app.add_subcommand("check", "finite-model equivalence of two terms");
  c_check->add_option("input", input, "first term")->required();
  c_check->add_option("input2", input2, "second term")->required();
  c_check->add_option("--mode", mode_s, "hom | het")->check(CLI::IsMember({"hom", "het"}));
  c_check->add_option("--sig", sig_path, "signature file");
  c_check->add_option("--lang", lang_s, "auto | fo3 | ra")
      ->check(CLI::IsMember({"auto", "fo3", "ra"}));
  add_budget(c_check);

  CLI::App* c_typecheck = app.add_subcommand("typecheck", "report typing violations");
  add_io(c_typecheck);
  c_typecheck->add_option("--lang", lang_s, "auto | fo3 | ra")
      ->check(CLI::IsMember({"auto", "fo3", "ra"}));

  CLI::App* c_mine = app.add_subcommand("mine", "mine homogeneous rewrite rules");
  c_mine->add_option("--max-size", max_size, "largest lhs pattern size");
  c_mine->add_option("--out", out_path, "rule file to write (and resume from)");
  add_budget(c_mine);

  CLI::App* c_lift = app.add_subcommand("lift", "retype homogeneous rules over sorts");
  c_lift->add_option("--rules", rules_path, "homogeneous rule file to lift");
  c_lift->add_option("--out", out_path, "rule file to write");
  add_budget(c_lift);

  CLI::App* c_fuzz = app.add_subcommand("fuzz", "random round-trip validation");
  c_fuzz->add_option("--mode", mode_s, "hom | het")->check(CLI::IsMember({"hom", "het"}));
  c_fuzz->add_option("--sig", sig_path, "signature file");
  c_fuzz->add_option("--rules", rules_path, "rewrite rule file");
  c_fuzz->add_option("--count", count, "number of cases");
  c_fuzz->add_option("--size", size_arg, "formula size");
  c_fuzz->add_flag("--no-simplify", no_simplify, "translate without rewriting");
  add_budget(c_fuzz);

  CLI11_PARSE(app, argc, argv);

  std::string text;
  try {
    Mode mode = parse_mode(mode_s);
    Lang lang = lang_s == "fo3" ? Lang::Fo3 : lang_s == "ra" ? Lang::Ra : Lang::Auto;

    if (app.got_subcommand(c_translate)) {
      Signature sig = load_sig(sig_path, mode);
      text = read_input(input);
      FoPtr f = parse_fo3(text, sig, mode);
      RuleSet rules;
      if (!no_simplify) rules = load_ruleset(rules_path, mode);
      try {
        TranslationTrace t = translate(f, sig, mode, rules.rules.empty() ? nullptr : &rules);
        if (trace)
          std::cout << render_trace(t);
        else
          std::cout << pretty_print(t.simplified) << "\n";
      } catch (const TooManyVariables& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }

    if (app.got_subcommand(c_back)) {
      Signature sig = load_sig(sig_path, mode);
      text = read_input(input);
      RaPtr e = parse_ra(text, sig, mode, /*strict=*/true);
      std::cout << pretty_print(close(e)) << "\n";
      return 0;
    }

    if (app.got_subcommand(c_simplify)) {
      Signature sig = load_sig(sig_path, mode);
      text = read_input(input);
      RaPtr e = parse_ra(text, sig, mode, /*strict=*/true);
      Matcher m(load_ruleset(rules_path, mode));
      if (trace) {
        while (auto step = rewrite_once(e, m)) {
          std::cout << step->second << ": " << pretty_print(e) << " => "
                    << pretty_print(step->first) << "\n";
          e = step->first;
        }
      } else {
        e = simplify_full(e, m).first;
      }
      std::cout << pretty_print(e) << "\n";
      return 0;
    }

    if (app.got_subcommand(c_check)) {
      Signature sig = load_sig(sig_path, mode);
      OracleBudget budget = make_budget(bound, samples, seed);
      text = read_input(input);
      Parsed p1 = parse_any(text, lang, sig, mode);
      std::string text2 = read_input(input2);
      Verdict v;
      if (p1.lang == Lang::Ra) {
        RaPtr e2;
        try {
          e2 = parse_ra(text2, sig, mode);
        } catch (const SourceError& e) {
          print_source_error(text2, e);
          return 2;
        }
        require_well_typed(p1.ra, sig);
        require_well_typed(e2, sig);
        if (type_of(p1.ra) != type_of(e2)) {
          std::cerr << "error: type mismatch: " << pretty_print(p1.ra) << " has type ("
                    << type_of(p1.ra).first << "," << type_of(p1.ra).second << ") but "
                    << pretty_print(e2) << " has type (" << type_of(e2).first << ","
                    << type_of(e2).second << ")\n";
          return 2;
        }
        v = check_equiv_ra(p1.ra, e2, budget);
      } else {
        FoPtr f2;
        try {
          f2 = parse_fo3(text2, sig, mode);
        } catch (const SourceError& e) {
          print_source_error(text2, e);
          return 2;
        }
        require_closed_and_typed(p1.fo, sig);
        require_closed_and_typed(f2, sig);
        v = check_equiv_fo3(p1.fo, f2, sig, budget);
      }
      if (v.valid) {
        std::cout << "Valid(bound=" << v.bound << (v.sampled ? ", sampled" : "") << ")\n";
        return 0;
      }
      std::cout << "Counterexample:\n" << v.counterexample->to_text();
      return 1;
    }

    if (app.got_subcommand(c_typecheck)) {
      Signature sig = load_sig(sig_path, mode);
      text = read_input(input);
      Parsed p = parse_any(text, lang, sig, mode);
      std::vector<Violation> vs = p.lang == Lang::Ra ? check_well_typed_ra(p.ra, sig)
                                                     : check_closed_and_typed_fo3(p.fo, sig);
      for (const Violation& v : vs)
        std::cout << "condition " << v.condition << ": " << v.message << "\n";
      if (vs.empty()) std::cout << "well-typed\n";
      return vs.empty() ? 0 : 1;
    }

    if (app.got_subcommand(c_mine)) {
      MinerConfig cfg;
      cfg.max_lhs_size = max_size;
      cfg.budget = make_budget(bound, samples, seed);
      cfg.out_path = out_path;
      RuleSet rules = mine(cfg, &std::cerr);
      if (out_path.empty()) std::cout << render_rules(rules);
      return 0;
    }

    if (app.got_subcommand(c_lift)) {
      RuleSet hom = load_ruleset(rules_path, Mode::Hom);
      RuleSet het = lift_heterogeneous(hom, make_budget(bound, samples, seed), &std::cerr);
      if (out_path.empty())
        std::cout << render_rules(het);
      else
        save_rules(het, out_path);
      return 0;
    }

    if (app.got_subcommand(c_fuzz)) {
      FuzzConfig cfg;
      cfg.mode = mode;
      cfg.sig = sig_path.empty() ? default_signature(mode) : parse_signature(read_file(sig_path));
      cfg.count = count;
      cfg.target_size = size_arg;
      cfg.seed = seed;
      cfg.simplify = !no_simplify;
      if (!no_simplify) cfg.rules = load_ruleset(rules_path, mode);
      cfg.budget = make_budget(bound, samples, seed);
      FuzzSummary s = fuzz(cfg, &std::cerr);
      std::cout << "passed=" << s.passed << " failed=" << s.failed << "\n";
      return s.failed == 0 ? 0 : 1;
    }
  } catch (const SourceError& e) {
    print_source_error(text, e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
