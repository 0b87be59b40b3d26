#include "physarum/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "physarum/bisimulation.hpp"
#include "physarum/conformance.hpp"
#include "physarum/environment.hpp"
#include "physarum/error.hpp"
#include "physarum/formula.hpp"
#include "physarum/lts.hpp"
#include "physarum/normalize.hpp"
#include "physarum/streams.hpp"
#include "physarum/syntax.hpp"

namespace physarum::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TermFile load_terms(const std::string& path) {
  try {
    return parse_term_file(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

Environment load_env(const std::string& scene_path) {
  if (scene_path.empty()) return {};
  try {
    return load_scene(read_file(scene_path));
  } catch (const SceneError& e) {
    throw InputError(scene_path + ": " + e.what());
  }
}

Environment env_for(const std::string& scene_path, const TermFile& file) {
  Environment env = load_env(scene_path);
  merge_definitions(env, file.definitions);
  return env;
}

// "states=N,depth=D,unfold=U", any subset, applied over `base`.
Bounds parse_bounds(const std::string& arg, Bounds base) {
  std::istringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--bounds", "expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoul(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || value == 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--bounds", "expected a positive integer in '" + item + "'");
    }
    if (key == "states")
      base.max_states = value;
    else if (key == "depth")
      base.max_depth = value;
    else if (key == "unfold")
      base.max_unfold = value;
    else
      throw CLI::ValidationError("--bounds", "unknown bound '" + key + "'");
  }
  return base;
}

struct Output {
  std::string path;
  std::ostream& fallback;

  void write(const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
  }
};

std::string moves_text(const std::vector<DistinguishingMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += ' ';
    out += m.action.to_string() + (m.on_left ? "@left" : "@right");
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Physarum process calculus toolkit"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string output;
  std::string bounds_arg;

  // fmt
  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "Print a term file in canonical form");
  fmt->add_option("term-file", fmt_file, "Term file (.phy)")->required();
  fmt->add_option("-o,--output", output, "Write to this file instead of standard output");

  // lts
  std::string lts_file, lts_scene;
  bool lts_diffusion = false, lts_dot = false, lts_text = false;
  auto* lts = app.add_subcommand("lts", "Derive and export the labelled transition system of a term");
  lts->add_option("term-file", lts_file, "Term file (.phy)")->required();
  lts->add_option("scene-file", lts_scene, "Scene file (.scene)");
  lts->add_option("--bounds", bounds_arg, "Exploration bounds: states=N,depth=N,unfold=N");
  lts->add_flag("--diffusion", lts_diffusion, "Register C(a) ::= P' for every derived transition");
  auto* dot_flag = lts->add_flag("--dot", lts_dot, "Emit a DOT digraph");
  auto* lts_flag = lts->add_flag("--lts", lts_text, "Emit the line-oriented .lts format (default)");
  dot_flag->excludes(lts_flag);
  lts->add_option("-o,--output", output, "Write to this file instead of standard output");

  // bisim
  std::string bisim_a, bisim_b, bisim_scene;
  auto* bisim = app.add_subcommand("bisim", "Decide strong bisimilarity of two terms' roots");
  bisim->add_option("term-file-1", bisim_a, "First term file")->required();
  bisim->add_option("term-file-2", bisim_b, "Second term file")->required();
  bisim->add_option("scene-file", bisim_scene, "Scene file (.scene)");
  bisim->add_option("--bounds", bounds_arg, "Exploration bounds: states=N,depth=N,unfold=N");

  // normalize
  std::string norm_file;
  auto* norm = app.add_subcommand("normalize", "Print the congruence normal form of a term");
  norm->add_option("term-file", norm_file, "Term file (.phy)")->required();
  norm->add_option("-o,--output", output, "Write to this file instead of standard output");

  // eval
  std::string eval_formulas, eval_scene, eval_term;
  std::size_t eval_state = 0, eval_path = 0, eval_depth = 64;
  auto* eval = app.add_subcommand("eval", "Evaluate trace formulas on one execution of a term");
  eval->add_option("formula-file", eval_formulas, "One formula per line")->required();
  eval->add_option("scene-file", eval_scene, "Scene file with prop lines")->required();
  eval->add_option("--term", eval_term, "Term file whose LTS supplies the states")->required();
  eval->add_option("--state", eval_state, "Start state id")->capture_default_str();
  eval->add_option("--path-index", eval_path, "Which maximal execution to use")->capture_default_str();
  eval->add_option("--depth", eval_depth, "Maximum number of executions enumerated")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  eval->add_option("-o,--output", output, "Write to this file instead of standard output");

  // laws
  std::string laws_scene;
  std::uint64_t laws_seed = 0;
  std::size_t laws_samples = 50;
  auto* laws = app.add_subcommand("laws", "Check the congruence laws against strong bisimilarity");
  laws->add_option("scene-file", laws_scene, "Scene file (.scene)")->required();
  laws->add_option("--seed", laws_seed, "Random seed")->capture_default_str();
  laws->add_option("--samples", laws_samples, "Instantiations per law")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  laws->add_option("-o,--output", output, "Write to this file instead of standard output");

  // trace
  std::string trace_file, trace_scene;
  std::size_t trace_state = 0, trace_len = 4;
  auto* trace = app.add_subcommand("trace", "Enumerate label traces from a state");
  trace->add_option("term-file", trace_file, "Term file (.phy)")->required();
  trace->add_option("scene-file", trace_scene, "Scene file (.scene)");
  trace->add_option("--state", trace_state, "Start state id")->capture_default_str();
  trace->add_option("--max-len", trace_len, "Longest trace to list")->capture_default_str();
  trace->add_option("-o,--output", output, "Write to this file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "physarum: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Output sink{output, out};
    if (*fmt) {
      sink.write(format_term_file(load_terms(fmt_file)));
    } else if (*lts) {
      TermFile file = load_terms(lts_file);
      Environment env = env_for(lts_scene, file);
      Bounds bounds = parse_bounds(bounds_arg, env.bounds);
      Lts result = build_lts(file.root, env, bounds, lts_diffusion);
      sink.write(lts_dot ? to_dot(result) : to_lts_text(result));
      if (result.truncated()) err << "physarum: exploration bound reached; LTS is truncated\n";
      for (const auto& ev : result.diffusion_report())
        err << (ev.conflict ? "diffusion conflict C(" : "diffusion bind C(") << ev.label.to_string()
            << ") := " << format(ev.term) << " at state " << ev.state << '\n';
    } else if (*bisim) {
      TermFile a = load_terms(bisim_a);
      TermFile b = load_terms(bisim_b);
      Environment env = env_for(bisim_scene, a);
      merge_definitions(env, b.definitions);
      Bounds bounds = parse_bounds(bounds_arg, env.bounds);
      auto verdict = bisimilar_terms(a.root, b.root, env, bounds);
      std::string text = verdict.bisimilar ? "bisimilar\n" : "not bisimilar\n";
      if (!verdict.bisimilar) text += "distinguishing: " + moves_text(verdict.distinguishing) + "\n";
      if (verdict.approximate) text += "approximate: exploration bound reached\n";
      out << text;
      return verdict.bisimilar ? kOk : kVerdictFalse;
    } else if (*norm) {
      sink.write(format(normalize(load_terms(norm_file).root)) + "\n");
    } else if (*eval) {
      TermFile file = load_terms(eval_term);
      Environment env = env_for(eval_scene, file);
      Lts graph = build_lts(file.root, env, env.bounds);
      if (eval_state >= graph.size())
        throw InputError("no state " + std::to_string(eval_state));
      auto streams = state_streams(graph, eval_state, eval_depth);
      if (eval_path >= streams.streams.size())
        throw InputError("path index " + std::to_string(eval_path) + " out of range (" +
                         std::to_string(streams.streams.size()) + " executions)");
      const RationalStream& path = streams.streams[eval_path];
      std::string text;
      std::istringstream lines(read_file(eval_formulas));
      std::string line;
      while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Formula f = parse_formula(line);
        StreamEnv bindings;
        for (const auto& v : f.variables()) bindings.emplace(v, path);
        text += format(f) + " : " + eval_formula(f, bindings, env.valuation).to_string() + "\n";
      }
      sink.write(text);
    } else if (*laws) {
      ConformanceParams params;
      params.seed = laws_seed;
      params.samples = laws_samples;
      sink.write(law_conformance(params, load_env(laws_scene)).to_text());
    } else if (*trace) {
      TermFile file = load_terms(trace_file);
      Environment env = env_for(trace_scene, file);
      Lts graph = build_lts(file.root, env, env.bounds);
      if (trace_state >= graph.size()) throw InputError("no state " + std::to_string(trace_state));
      std::string text;
      for (const auto& word : bounded_traces(graph, trace_state, trace_len)) {
        for (std::size_t i = 0; i < word.size(); ++i) text += (i ? " " : "") + word[i].to_string();
        text += '\n';
      }
      sink.write(text);
    }
  } catch (const CLI::ValidationError& e) {
    err << "physarum: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "physarum: " << e.what() << '\n';
    return kInput;
  }
  return kOk;
}

}  // namespace physarum::cli
