#include "physarum/lts.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "physarum/error.hpp"
#include "physarum/syntax.hpp"

namespace physarum {

std::vector<Edge> Lts::outgoing(StateId s) const {
  return {transitions_.begin() + static_cast<std::ptrdiff_t>(first_edge_[s]),
          transitions_.begin() + static_cast<std::ptrdiff_t>(first_edge_[s + 1])};
}

std::optional<StateId> Lts::find(const Term& term) const {
  for (StateId i = 0; i < states_.size(); ++i)
    if (states_[i] == term) return i;
  return std::nullopt;
}

namespace {

struct Exploration {
  std::vector<Term> states;
  std::vector<Edge> edges;
  bool truncated = false;
};

// Level-synchronous BFS: the states first reached at one level are numbered
// in formatted-term order, so numbering does not depend on expansion order.
Exploration explore(const Term& root, const Environment& env, const Bounds& bounds) {
  Exploration ex;
  ex.states.push_back(root);
  std::unordered_map<Term, StateId, TermHash> index{{root, 0}};

  std::vector<StateId> frontier{0};
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    std::vector<std::vector<Transition>> derived;
    derived.reserve(frontier.size());
    for (StateId s : frontier) {
      auto where = [&] { return "state " + std::to_string(s) + " (" + format(ex.states[s]) + ")"; };
      try {
        derived.push_back(derive_transitions(ex.states[s], env, bounds.max_unfold));
      } catch (const UnresolvedConstant& e) {
        throw UnresolvedConstant(e.name(), where());
      } catch (const DepthExceeded& e) {
        throw DepthExceeded(where() + ": " + e.what());
      }
    }

    if (level >= bounds.max_depth) {
      for (const auto& ts : derived)
        if (!ts.empty()) ex.truncated = true;
      break;
    }

    std::map<std::string, Term> fresh;
    for (const auto& ts : derived)
      for (const auto& t : ts)
        if (!index.count(t.target)) fresh.emplace(format(t.target), t.target);

    std::vector<StateId> next;
    for (auto& [text, term] : fresh) {
      if (ex.states.size() >= bounds.max_states) {
        ex.truncated = true;
        break;
      }
      index.emplace(term, ex.states.size());
      next.push_back(ex.states.size());
      ex.states.push_back(term);
    }

    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& t : derived[i]) {
        auto it = index.find(t.target);
        if (it == index.end()) {
          ex.truncated = true;
          continue;
        }
        ex.edges.push_back({frontier[i], t.action, it->second, t.rule});
      }
    }
    frontier = std::move(next);
  }

  std::sort(ex.edges.begin(), ex.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.action, a.target, a.rule) <
           std::tie(b.source, b.action, b.target, b.rule);
  });
  return ex;
}

}  // namespace

Lts build_lts(const Term& root, const Environment& env, const Bounds& bounds, bool diffusion) {
  Environment current = env;
  std::vector<DiffusionEvent> report;
  for (;;) {
    Exploration ex = explore(root, current, bounds);

    if (diffusion) {
      std::vector<DiffusionEvent> pass;
      std::set<std::pair<Label, Term>> seen_conflicts;
      Environment next = current;
      bool grew = false;
      for (const auto& e : ex.edges) {
        const Term& target = ex.states[e.target];
        auto bound = next.lookup_diffusion(e.action);
        if (!bound) {
          next = next.bind_diffusion(e.action, target);
          pass.push_back({e.action, target, e.source, false});
          grew = true;
        } else if (!(*bound == target) && seen_conflicts.emplace(e.action, target).second) {
          pass.push_back({e.action, target, e.source, true});
        }
      }
      if (grew) {
        // New bindings can enable C(a) states; explore again with them.
        for (auto& ev : pass)
          if (!ev.conflict) report.push_back(ev);
        current = std::move(next);
        continue;
      }
      report.insert(report.end(), pass.begin(), pass.end());
    }

    Lts lts;
    lts.states_ = std::move(ex.states);
    lts.transitions_ = std::move(ex.edges);
    lts.truncated_ = ex.truncated;
    lts.diffusion_report_ = std::move(report);
    lts.env_ = std::move(current);
    lts.first_edge_.assign(lts.states_.size() + 1, 0);
    for (const auto& e : lts.transitions_) ++lts.first_edge_[e.source + 1];
    for (std::size_t i = 1; i < lts.first_edge_.size(); ++i)
      lts.first_edge_[i] += lts.first_edge_[i - 1];
    return lts;
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Lts& lts) {
  std::ostringstream out;
  out << "digraph lts {\n";
  out << "  node [shape=box];\n";
  for (StateId i = 0; i < lts.size(); ++i) {
    out << "  s" << i << " [label=\"" << dot_escape(format(lts.states()[i])) << "\"";
    if (auto it = lts.coordinates().find(i); it != lts.coordinates().end())
      out << ", xlabel=\"p" << it->second.first << "," << it->second.second << "\"";
    if (i == 0) out << ", penwidth=2";
    out << "];\n";
  }
  for (const auto& e : lts.transitions())
    out << "  s" << e.source << " -> s" << e.target << " [label=\""
        << dot_escape(e.action.to_string()) << " (" << rule_name(e.rule) << ")\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_lts_text(const Lts& lts) {
  std::ostringstream out;
  out << "states " << lts.size() << " transitions " << lts.transitions().size() << " root 0\n";
  for (StateId i = 0; i < lts.size(); ++i) out << "state " << i << ' ' << format(lts.states()[i]) << '\n';
  for (const auto& e : lts.transitions())
    out << "trans " << e.source << ' ' << e.action.to_string() << ' ' << e.target << ' '
        << rule_name(e.rule) << '\n';
  return out.str();
}

}  // namespace physarum
