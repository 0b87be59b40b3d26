#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "physarum/environment.hpp"
#include "physarum/label.hpp"
#include "physarum/term.hpp"

namespace physarum {

/// The outermost rule schema of a derivation.
enum class Rule {
  Prefix,
  PrefixA,
  PrefixR,
  Diffusion,
  Constant,
  ChoiceL,
  ChoiceR,
  CoopL,
  CoopR,
  CoopSync,
  Hiding,
  FuseAnnihilate,
  FuseJoinL,
  FuseJoinR,
  FuseSpreadL,
  FuseSpreadR,
};

inline constexpr std::size_t kRuleCount = 16;

std::string_view rule_name(Rule rule);
Rule rule_from_name(std::string_view name);

struct Transition {
  Term source;
  Label action;
  Term target;
  Rule rule;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// All one-step transitions of `term`, sorted by (action, target, rule) and
/// duplicate-free. Throws UnresolvedConstant, or DepthExceeded when more than
/// `max_unfold` nested constant/diffusion unfoldings are needed.
std::vector<Transition> derive_transitions(const Term& term, const Environment& env,
                                           std::size_t max_unfold = 64);

/// Re-derives `t` using only the rule it is tagged with.
bool replays(const Transition& t, const Environment& env, std::size_t max_unfold = 64);

}  // namespace physarum
