#include "physarum/environment.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "physarum/error.hpp"
#include "physarum/syntax.hpp"

namespace physarum {

void Environment::declare_universe(const LabelSet& names) {
  universe_.insert(names.begin(), names.end());
  universe_declared_ = true;
}

std::optional<Label> Environment::lookup_attract(const Label& label) const {
  auto it = attract_.find(label);
  if (it == attract_.end()) return std::nullopt;
  return it->second;
}

std::optional<Label> Environment::lookup_repel(const Label& label) const {
  auto it = repel_.find(label);
  if (it == repel_.end()) return std::nullopt;
  return it->second;
}

std::optional<Term> Environment::lookup_diffusion(const Label& label) const {
  auto it = diffusion_.find(label);
  if (it == diffusion_.end()) return std::nullopt;
  return it->second;
}

Environment Environment::bind_diffusion(const Label& label, const Term& term) const {
  auto it = diffusion_.find(label);
  if (it != diffusion_.end()) {
    if (it->second == term) return *this;
    throw DiffusionConflict("C(" + label.to_string() + ") already bound to " +
                            format(it->second) + ", cannot rebind to " + format(term));
  }
  Environment next = *this;
  next.diffusion_.emplace(label, term);
  return next;
}

const Term& Environment::resolve_constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw UnresolvedConstant(name);
  return it->second;
}

void Environment::define_constant(const std::string& name, const Term& body) {
  constants_.insert_or_assign(name, body);
}

namespace {

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_constant_name(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0)
    throw SceneError(line, "expected a positive integer, found '" + s + "'");
  return v;
}

Label scene_label(const std::string& text, std::size_t line) {
  try {
    return parse_label(text);
  } catch (const Error& e) {
    throw SceneError(line, "bad label '" + text + "'");
  }
}

Term scene_term(std::string_view text, std::size_t line) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw SceneError(line, std::string("bad term: ") + e.what());
  }
}

struct Pending {
  std::size_t line;
  Label from;
  Label to;
};

void collect_constants(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out.insert(t.name());
      return;
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
    case TermKind::Hide:
      collect_constants(t.body(), out);
      return;
    case TermKind::Coop:
    case TermKind::Fuse:
    case TermKind::Choice:
      collect_constants(t.left(), out);
      collect_constants(t.right(), out);
      return;
    default:
      return;
  }
}

}  // namespace

Environment load_scene(std::string_view text) {
  Environment env;
  std::vector<Pending> table_rows;
  std::vector<std::pair<std::size_t, Term>> bodies;
  std::set<Label> diffusion_seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto w = words(raw);
    if (w.empty()) continue;

    if (w[0] == "universe") {
      LabelSet names;
      for (std::size_t i = 1; i < w.size(); ++i) {
        Label l = scene_label(w[i], line_no);
        if (l.is_tau() || l.polarity() != Polarity::Activator)
          throw SceneError(line_no, "universe lists plain names, found '" + w[i] + "'");
        names.insert(l);
      }
      env.declare_universe(names);
    } else if (w[0] == "A:" || w[0] == "R:") {
      if (w.size() != 4 || w[2] != "->")
        throw SceneError(line_no, "expected '" + w[0] + " <label> -> <label>'");
      Label from = scene_label(w[1], line_no);
      Label to = scene_label(w[3], line_no);
      if (from.is_tau() || to.is_tau())
        throw SceneError(line_no, "attractant/repellent tables map named labels");
      auto existing = w[0] == "A:" ? env.lookup_attract(from) : env.lookup_repel(from);
      if (existing && *existing != to)
        throw SceneError(line_no, w[0] + " " + from.to_string() + " defined twice");
      if (w[0] == "A:")
        env.set_attract(from, to);
      else
        env.set_repel(from, to);
      table_rows.push_back({line_no, from, to});
    } else if (w[0] == "C:") {
      auto def = raw.find(":=");
      if (w.size() < 4 || w[2] != ":=" || def == std::string_view::npos)
        throw SceneError(line_no, "expected 'C: <label> := <term>'");
      Label l = scene_label(w[1], line_no);
      if (!diffusion_seen.insert(l).second)
        throw SceneError(line_no, "C(" + l.to_string() + ") bound twice");
      Term body = scene_term(raw.substr(def + 2), line_no);
      env = env.bind_diffusion(l, body);
      bodies.emplace_back(line_no, body);
    } else if (w[0] == "bound") {
      if (w.size() != 3) throw SceneError(line_no, "expected 'bound <states|depth|unfold> <n>'");
      std::size_t n = parse_count(w[2], line_no);
      if (w[1] == "states")
        env.bounds.max_states = n;
      else if (w[1] == "depth")
        env.bounds.max_depth = n;
      else if (w[1] == "unfold")
        env.bounds.max_unfold = n;
      else
        throw SceneError(line_no, "unknown bound '" + w[1] + "'");
    } else if (w[0] == "prop") {
      if (w.size() != 4 || (w[3] != "T" && w[3] != "F"))
        throw SceneError(line_no, "expected 'prop <name> <state-id> <T|F>'");
      std::size_t state = 0;
      auto [p, ec] = std::from_chars(w[2].data(), w[2].data() + w[2].size(), state);
      if (ec != std::errc() || p != w[2].data() + w[2].size())
        throw SceneError(line_no, "bad state id '" + w[2] + "'");
      auto key = std::make_pair(w[1], state);
      bool value = w[3] == "T";
      auto it = env.valuation.find(key);
      if (it != env.valuation.end() && it->second != value)
        throw SceneError(line_no, "contradictory valuation for " + w[1]);
      env.valuation[key] = value;
    } else if (w.size() >= 3 && w[1] == ":=" && is_constant_name(w[0])) {
      auto def = raw.find(":=");
      if (env.has_constant(w[0])) throw SceneError(line_no, "constant " + w[0] + " defined twice");
      Term body = scene_term(raw.substr(def + 2), line_no);
      env.define_constant(w[0], body);
      bodies.emplace_back(line_no, body);
    } else {
      throw SceneError(line_no, "unknown directive '" + w[0] + "'");
    }
  }

  if (env.universe_declared()) {
    for (const auto& row : table_rows) {
      for (const Label& l : {row.from, row.to}) {
        if (!env.universe().count(Label::named(l.name())))
          throw SceneError(row.line, "label '" + l.to_string() + "' not in universe");
      }
    }
  }
  for (const auto& [line, body] : bodies) {
    std::set<std::string> used;
    collect_constants(body, used);
    for (const auto& name : used)
      if (!env.has_constant(name)) throw SceneError(line, "undeclared constant " + name);
  }
  return env;
}

std::string save_scene(const Environment& env) {
  std::ostringstream out;
  if (env.universe_declared()) {
    out << "universe";
    for (const auto& l : env.universe()) out << ' ' << l.to_string();
    out << '\n';
  }
  for (const auto& [from, to] : env.attract_table())
    out << "A: " << from.to_string() << " -> " << to.to_string() << '\n';
  for (const auto& [from, to] : env.repel_table())
    out << "R: " << from.to_string() << " -> " << to.to_string() << '\n';
  for (const auto& [label, body] : env.diffusion_table())
    out << "C: " << label.to_string() << " := " << format(body) << '\n';
  for (const auto& [name, body] : env.constants()) out << name << " := " << format(body) << '\n';
  const Bounds defaults;
  if (env.bounds.max_states != defaults.max_states)
    out << "bound states " << env.bounds.max_states << '\n';
  if (env.bounds.max_depth != defaults.max_depth)
    out << "bound depth " << env.bounds.max_depth << '\n';
  if (env.bounds.max_unfold != defaults.max_unfold)
    out << "bound unfold " << env.bounds.max_unfold << '\n';
  for (const auto& [key, value] : env.valuation)
    out << "prop " << key.first << ' ' << key.second << ' ' << (value ? 'T' : 'F') << '\n';
  return out.str();
}

void merge_definitions(Environment& env,
                       const std::vector<std::pair<std::string, Term>>& definitions) {
  for (const auto& [name, body] : definitions) {
    if (env.has_constant(name) && !(env.resolve_constant(name) == body))
      throw Error("constant " + name + " defined differently in term file and scene");
    env.define_constant(name, body);
  }
}

}  // namespace physarum
