#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "default_rules.hpp"
#include "fo3ra/backtranslate.hpp"
#include "fo3ra/check.hpp"
#include "fo3ra/parse.hpp"
#include "fo3ra/pretty.hpp"
#include "fo3ra/rulegen.hpp"
#include "fo3ra/testkit.hpp"
#include "fo3ra/translate.hpp"

namespace py = pybind11;
using namespace fo3ra;

namespace {

Mode to_mode(const std::string& s) {
  if (s == "hom") return Mode::Hom;
  if (s == "het") return Mode::Het;
  throw std::invalid_argument("mode must be hom or het");
}

Signature to_sig(const std::string& text, Mode mode) {
  if (!text.empty()) return parse_signature(text);
  return mode == Mode::Hom ? Signature::homogeneous() : default_signature(Mode::Het);
}

RuleSet to_rules(const std::string& text, Mode mode) {
  if (!text.empty()) return parse_rules(text, mode);
  return parse_rules(mode == Mode::Hom ? kDefaultHomRules : kDefaultHetRules, mode);
}

OracleBudget to_budget(int bound, int samples, unsigned long long seed) {
  OracleBudget b;
  b.exhaustive_max_card = bound;
  if (samples == 0)
    b.stage2 = false;
  else
    b.samples = samples;
  b.seed = seed;
  return b;
}

}  // namespace

PYBIND11_MODULE(_fo3ra, m) {
  m.doc() = "three-variable first-order logic <-> relation algebra";

  py::register_exception<SourceError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "TypingError", PyExc_ValueError);

  py::class_<TranslationTrace>(m, "Trace")
      .def_property_readonly("original", [](const TranslationTrace& t) { return pretty_print(t.original); })
      .def_property_readonly("nnf", [](const TranslationTrace& t) { return pretty_print(t.nnf); })
      .def_property_readonly("good", [](const TranslationTrace& t) { return pretty_print(t.good); })
      .def_property_readonly("nice", [](const TranslationTrace& t) { return pretty_print(t.nice); })
      .def_property_readonly("raw", [](const TranslationTrace& t) { return pretty_print(t.raw); })
      .def_property_readonly("simplified",
                             [](const TranslationTrace& t) { return pretty_print(t.simplified); })
      .def_readonly("rules", &TranslationTrace::rules)
      .def("render", &render_trace);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("valid", &Verdict::valid)
      .def_readonly("bound", &Verdict::bound)
      .def_readonly("sampled", &Verdict::sampled)
      .def_property_readonly("counterexample", [](const Verdict& v) -> py::object {
        if (!v.counterexample) return py::none();
        return py::str(v.counterexample->to_text());
      })
      .def("__bool__", [](const Verdict& v) { return v.valid; });

  m.def(
      "translate",
      [](const std::string& formula, const std::string& sig, const std::string& mode,
         bool simplify, const std::string& rules) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        FoPtr f = parse_fo3(formula, s, md);
        RuleSet rs;
        if (simplify) rs = to_rules(rules, md);
        return translate(f, s, md, rs.rules.empty() ? nullptr : &rs);
      },
      py::arg("formula"), py::arg("sig") = "", py::arg("mode") = "hom",
      py::arg("simplify") = true, py::arg("rules") = "");

  m.def(
      "backtranslate",
      [](const std::string& expr, const std::string& sig, const std::string& mode) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        return pretty_print(close(parse_ra(expr, s, md, /*strict=*/true)));
      },
      py::arg("expr"), py::arg("sig") = "", py::arg("mode") = "hom");

  m.def(
      "simplify",
      [](const std::string& expr, const std::string& sig, const std::string& mode,
         const std::string& rules) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        RaPtr e = parse_ra(expr, s, md, /*strict=*/true);
        auto [out, steps] = simplify_full(e, to_rules(rules, md));
        return py::make_tuple(pretty_print(out), steps);
      },
      py::arg("expr"), py::arg("sig") = "", py::arg("mode") = "hom", py::arg("rules") = "");

  m.def(
      "check_equiv_fo3",
      [](const std::string& a, const std::string& b, const std::string& sig,
         const std::string& mode, int bound, int samples, unsigned long long seed) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        FoPtr f1 = parse_fo3(a, s, md, /*strict=*/true);
        FoPtr f2 = parse_fo3(b, s, md, /*strict=*/true);
        return check_equiv_fo3(f1, f2, s, to_budget(bound, samples, seed));
      },
      py::arg("a"), py::arg("b"), py::arg("sig") = "", py::arg("mode") = "hom",
      py::arg("bound") = 2, py::arg("samples") = 20000, py::arg("seed") = 0);

  m.def(
      "check_equiv_ra",
      [](const std::string& a, const std::string& b, const std::string& sig,
         const std::string& mode, int bound, int samples, unsigned long long seed) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        RaPtr e1 = parse_ra(a, s, md, /*strict=*/true);
        RaPtr e2 = parse_ra(b, s, md, /*strict=*/true);
        return check_equiv_ra(e1, e2, to_budget(bound, samples, seed));
      },
      py::arg("a"), py::arg("b"), py::arg("sig") = "", py::arg("mode") = "hom",
      py::arg("bound") = 2, py::arg("samples") = 20000, py::arg("seed") = 0);

  m.def(
      "typecheck",
      [](const std::string& text, const std::string& sig, const std::string& mode, bool ra) {
        Mode md = to_mode(mode);
        Signature s = to_sig(sig, md);
        std::vector<py::tuple> out;
        std::vector<Violation> vs =
            ra ? check_well_typed_ra(parse_ra(text, s, md), s)
               : check_closed_and_typed_fo3(parse_fo3(text, s, md), s);
        for (const Violation& v : vs) out.push_back(py::make_tuple(v.condition, v.message));
        return out;
      },
      py::arg("text"), py::arg("sig") = "", py::arg("mode") = "hom", py::arg("ra") = false);

  m.def(
      "mine",
      [](int max_size, int bound, int samples, unsigned long long seed) {
        MinerConfig cfg;
        cfg.max_lhs_size = max_size;
        cfg.budget = to_budget(bound, samples, seed);
        return render_rules(mine(cfg));
      },
      py::arg("max_size") = 3, py::arg("bound") = 2, py::arg("samples") = 20000,
      py::arg("seed") = 0);

  m.def(
      "lift",
      [](const std::string& rules, int bound, int samples, unsigned long long seed) {
        RuleSet hom = to_rules(rules, Mode::Hom);
        return render_rules(lift_heterogeneous(hom, to_budget(bound, samples, seed)));
      },
      py::arg("rules") = "", py::arg("bound") = 2, py::arg("samples") = 20000,
      py::arg("seed") = 0);

  m.def(
      "fuzz",
      [](int count, int size, unsigned long long seed, const std::string& mode,
         const std::string& rules) {
        FuzzConfig cfg;
        cfg.mode = to_mode(mode);
        cfg.sig = default_signature(cfg.mode);
        cfg.count = count;
        cfg.target_size = size;
        cfg.seed = seed;
        cfg.rules = to_rules(rules, cfg.mode);
        FuzzSummary s = fuzz(cfg);
        return py::make_tuple(s.passed, s.failed);
      },
      py::arg("count") = 50, py::arg("size") = 8, py::arg("seed") = 0, py::arg("mode") = "hom",
      py::arg("rules") = "");

  m.attr("default_hom_rules") = kDefaultHomRules;
  m.attr("default_het_rules") = kDefaultHetRules;
}
