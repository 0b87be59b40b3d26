#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "physarum/bisimulation.hpp"
#include "physarum/cli.hpp"
#include "physarum/conformance.hpp"
#include "physarum/connectives.hpp"
#include "physarum/environment.hpp"
#include "physarum/error.hpp"
#include "physarum/formula.hpp"
#include "physarum/lts.hpp"
#include "physarum/normalize.hpp"
#include "physarum/semantics.hpp"
#include "physarum/streams.hpp"
#include "physarum/syntax.hpp"

namespace py = pybind11;
using namespace physarum;

namespace {

std::vector<std::string> label_names(const LabelSet& s) {
  std::vector<std::string> out;
  for (const auto& l : s) out.push_back(l.to_string());
  return out;
}

LabelSet label_set(const std::vector<std::string>& names) {
  LabelSet s;
  for (const auto& n : names) s.insert(parse_label(n));
  return s;
}

Environment scene_or_empty(const std::optional<std::string>& scene) {
  return scene ? load_scene(*scene) : Environment{};
}

Bounds bounds_from(const Environment& env, std::optional<std::size_t> states, std::optional<std::size_t> depth,
                   std::optional<std::size_t> unfold) {
  Bounds b = env.bounds;
  if (states) b.max_states = *states;
  if (depth) b.max_depth = *depth;
  if (unfold) b.max_unfold = *unfold;
  return b;
}

}  // namespace

PYBIND11_MODULE(_physarum, m) {
  m.doc() = "Physarum process calculus: terms, transitions, bisimilarity, normal forms, trace formulas.";

  // Translators are tried newest first, so the base class goes in first.
  py::register_exception<Error>(m, "PhysarumError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SceneError>(m, "SceneError", PyExc_ValueError);

  py::class_<Term>(m, "Term")
      .def("__str__", [](const Term& t) { return format(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + format(t) + "')"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", &Term::hash)
      .def_property_readonly("size", &Term::size)
      .def_property_readonly("depth", &Term::depth);

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("format", [](const Term& t) { return format(t); }, py::arg("term"));
  m.def("complement", &complement_term, py::arg("term"));
  m.def(
      "sort",
      [](const Term& t, const std::optional<std::string>& scene) {
        return label_names(scene ? sort(t, load_scene(*scene)) : sort(t));
      },
      py::arg("term"), py::arg("scene") = py::none());

  m.def(
      "transitions",
      [](const Term& t, const std::optional<std::string>& scene) {
        std::vector<std::tuple<std::string, Term, std::string>> out;
        for (const auto& tr : derive_transitions(t, scene_or_empty(scene)))
          out.emplace_back(tr.action.to_string(), tr.target, std::string(rule_name(tr.rule)));
        return out;
      },
      py::arg("term"), py::arg("scene") = py::none(),
      "One-step transitions as (action, target, rule) tuples.");

  py::class_<Lts>(m, "Lts")
      .def_property_readonly("states", &Lts::states)
      .def_property_readonly("truncated", &Lts::truncated)
      .def_property_readonly("transitions",
                             [](const Lts& l) {
                               std::vector<std::tuple<StateId, std::string, StateId, std::string>> out;
                               for (const auto& e : l.transitions())
                                 out.emplace_back(e.source, e.action.to_string(), e.target,
                                                  std::string(rule_name(e.rule)));
                               return out;
                             })
      .def("__len__", &Lts::size)
      .def("to_dot", [](const Lts& l) { return to_dot(l); })
      .def("to_text", [](const Lts& l) { return to_lts_text(l); })
      .def(
          "traces",
          [](const Lts& l, StateId start, std::size_t max_len) {
            std::vector<std::vector<std::string>> out;
            for (const auto& w : bounded_traces(l, start, max_len)) {
              out.emplace_back();
              for (const auto& a : w) out.back().push_back(a.to_string());
            }
            return out;
          },
          py::arg("start") = 0, py::arg("max_len") = 4);

  m.def(
      "build_lts",
      [](const Term& root, const std::optional<std::string>& scene, std::optional<std::size_t> max_states,
         std::optional<std::size_t> max_depth, std::optional<std::size_t> max_unfold, bool diffusion) {
        Environment env = scene_or_empty(scene);
        return build_lts(root, env, bounds_from(env, max_states, max_depth, max_unfold), diffusion);
      },
      py::arg("root"), py::arg("scene") = py::none(), py::arg("max_states") = py::none(),
      py::arg("max_depth") = py::none(), py::arg("max_unfold") = py::none(), py::arg("diffusion") = false);

  m.def(
      "bisimilar",
      [](const Term& a, const Term& b, const std::optional<std::string>& scene) {
        Environment env = scene_or_empty(scene);
        BisimVerdict v = bisimilar_terms(a, b, env, env.bounds);
        std::vector<std::pair<std::string, std::string>> play;
        for (const auto& mv : v.distinguishing) play.emplace_back(mv.action.to_string(), mv.on_left ? "left" : "right");
        return py::make_tuple(v.bisimilar, play);
      },
      py::arg("a"), py::arg("b"), py::arg("scene") = py::none(),
      "(verdict, distinguishing moves as (action, side) pairs).");
  m.def(
      "bisimulation_blocks", [](const Lts& l) { return bisimilarity(l).blocks(); }, py::arg("lts"));

  m.def("normalize", &normalize, py::arg("term"));
  m.def("axiom_equal", &axiom_equal, py::arg("a"), py::arg("b"));

  m.def(
      "connectives",
      [](const std::vector<std::string>& universe, const std::vector<std::string>& p,
         const std::vector<std::string>& q) {
        DerivedConnectives dc(label_set(universe));
        LabelSet ps = label_set(p), qs = label_set(q);
        py::dict d;
        d["neg"] = label_names(dc.neg(ps));
        d["conj"] = label_names(dc.conj(ps, qs));
        d["disj"] = label_names(dc.disj(ps, qs));
        d["impl"] = label_names(dc.impl(ps, qs));
        return d;
      },
      py::arg("universe"), py::arg("p"), py::arg("q"));

  m.def(
      "law_report",
      [](const std::optional<std::string>& scene, std::uint64_t seed, std::size_t samples) {
        ConformanceParams params;
        params.seed = seed;
        params.samples = samples;
        return law_conformance(params, scene_or_empty(scene)).to_text();
      },
      py::arg("scene") = py::none(), py::arg("seed") = 0, py::arg("samples") = 50);

  m.def(
      "eval_formula",
      [](const std::string& formula, const Term& root, const std::string& scene, StateId state,
         std::size_t path_index) {
        Environment env = load_scene(scene);
        Lts l = build_lts(root, env, env.bounds);
        auto streams = state_streams(l, state, std::max<std::size_t>(64, path_index + 1)).streams;
        if (path_index >= streams.size()) throw IndexOutOfRange("no execution " + std::to_string(path_index));
        Formula f = parse_formula(formula);
        StreamEnv bindings;
        for (const auto& v : f.variables()) bindings.emplace(v, streams[path_index]);
        return eval_formula(f, bindings, env.valuation).to_string();
      },
      py::arg("formula"), py::arg("root"), py::arg("scene"), py::arg("state") = 0, py::arg("path_index") = 0,
      "Truth stream of a formula along one execution, in prefix (cycle)^w notation.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command-line invocation; returns (exit code, stdout, stderr).");
}
