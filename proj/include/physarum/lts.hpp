#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "physarum/environment.hpp"
#include "physarum/semantics.hpp"

namespace physarum {

struct Edge {
  StateId source;
  Label action;
  StateId target;
  Rule rule;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of the diffusion pass: the first binding of a label, or a later
/// transition that disagrees with it.
struct DiffusionEvent {
  Label label;
  Term term;
  StateId state;
  bool conflict;

  friend bool operator==(const DiffusionEvent&, const DiffusionEvent&) = default;
};

/// Bounded labelled transition system. State 0 is the root; states are
/// numbered breadth-first, each level ordered by formatted term.
class Lts {
 public:
  const std::vector<Term>& states() const { return states_; }
  /// Sorted by (source, action, target, rule).
  const std::vector<Edge>& transitions() const { return transitions_; }
  std::vector<Edge> outgoing(StateId s) const;
  bool truncated() const { return truncated_; }
  const std::vector<DiffusionEvent>& diffusion_report() const { return diffusion_report_; }
  /// Environment the LTS was derived in, including bindings added by the diffusion pass.
  const Environment& environment() const { return env_; }

  /// Optional (species i, cell j) annotation of states.
  const std::map<StateId, std::pair<int, int>>& coordinates() const { return coordinates_; }
  void annotate(StateId state, int species, int cell) { coordinates_[state] = {species, cell}; }

  std::size_t size() const { return states_.size(); }
  /// State id of a term, if it was discovered.
  std::optional<StateId> find(const Term& term) const;

 private:
  friend Lts build_lts(const Term&, const Environment&, const Bounds&, bool);

  std::vector<Term> states_;
  std::vector<Edge> transitions_;
  std::vector<std::size_t> first_edge_;  // CSR offsets into transitions_
  bool truncated_ = false;
  std::vector<DiffusionEvent> diffusion_report_;
  std::map<StateId, std::pair<int, int>> coordinates_;
  Environment env_;
};

/// Breadth-first closure of derive_transitions from `root`. With
/// `diffusion` set, every derived transition (P, a, P') registers
/// C(a) ::= P' (first binding wins, disagreements are reported) and the
/// exploration is repeated until no new bindings appear.
Lts build_lts(const Term& root, const Environment& env, const Bounds& bounds,
              bool diffusion = false);

std::string to_dot(const Lts& lts);
/// `states N transitions M root 0`, then `state` and `trans` lines.
std::string to_lts_text(const Lts& lts);

}  // namespace physarum
