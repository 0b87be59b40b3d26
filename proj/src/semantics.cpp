#include "physarum/semantics.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "physarum/error.hpp"
#include "physarum/syntax.hpp"

namespace physarum {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "Prefix",   "PrefixA",        "PrefixR",   "Diffusion", "Constant",    "ChoiceL",
    "ChoiceR",  "CoopL",          "CoopR",     "CoopSync",  "Hiding",      "FuseAnnihilate",
    "FuseJoinL", "FuseJoinR",     "FuseSpreadL", "FuseSpreadR"};

struct Move {
  Label action;
  Term target;
  Rule rule;
};

bool move_less(const Move& a, const Move& b) {
  return std::tie(a.action, a.target, a.rule) < std::tie(b.action, b.target, b.rule);
}

bool move_eq(const Move& a, const Move& b) {
  return a.action == b.action && a.target == b.target && a.rule == b.rule;
}

class Deriver {
 public:
  Deriver(const Environment& env, std::size_t max_unfold) : env_(env), max_unfold_(max_unfold) {}

  std::vector<Move> moves(const Term& t, std::size_t unfold) const {
    std::vector<Move> out;
    collect(t, unfold, out);
    std::sort(out.begin(), out.end(), move_less);
    out.erase(std::unique(out.begin(), out.end(), move_eq), out.end());
    return out;
  }

  bool can(const Term& t, const Label& action, const Term& target, std::size_t unfold) const {
    for (const auto& m : moves(t, unfold))
      if (m.action == action && m.target == target) return true;
    return false;
  }

  std::size_t next_unfold(std::size_t unfold, const std::string& what) const {
    if (unfold + 1 > max_unfold_)
      throw DepthExceeded("unfolding " + what + " exceeded " + std::to_string(max_unfold_) +
                          " nested steps (unguarded recursion?)");
    return unfold + 1;
  }

  // The diffusion pass binds C(a) to spread targets that contain C(a) again.
  // A derivation re-entering C(a) inside its own unfolding adds nothing, the
  // least solution of C(a) ::= 0 + C(a) + P'.
  std::vector<Move> diffusion_moves(const Label& label, const Term& bound, std::size_t unfold) const {
    if (std::find(open_diffusions_.begin(), open_diffusions_.end(), label) != open_diffusions_.end())
      return {};
    open_diffusions_.push_back(label);
    struct Pop {
      std::vector<Label>& v;
      ~Pop() { v.pop_back(); }
    } pop{open_diffusions_};
    return moves(bound, unfold);
  }

  static std::optional<Term> annihilation_partner(const Term& prefix_side) {
    if (prefix_side.kind() != TermKind::Prefix) return std::nullopt;
    return try_complement(prefix_side.body());
  }

 private:
  void collect(const Term& t, std::size_t unfold, std::vector<Move>& out) const {
    switch (t.kind()) {
      case TermKind::Nil:
        return;
      case TermKind::Prefix:
        out.push_back({t.label(), t.body(), Rule::Prefix});
        return;
      case TermKind::Attract:
        if (auto b = env_.lookup_attract(t.label())) out.push_back({*b, t.body(), Rule::PrefixA});
        return;
      case TermKind::Repel:
        if (auto b = env_.lookup_repel(t.label())) out.push_back({*b, t.body(), Rule::PrefixR});
        return;
      case TermKind::Diffuse: {
        auto bound = env_.lookup_diffusion(t.label());
        if (!bound) return;
        auto u = next_unfold(unfold, "C(" + t.label().to_string() + ")");
        for (auto& m : diffusion_moves(t.label(), *bound, u))
          out.push_back({m.action, m.target, Rule::Diffusion});
        return;
      }
      case TermKind::Const: {
        const Term& def = env_.resolve_constant(t.name());
        auto u = next_unfold(unfold, t.name());
        for (auto& m : moves(def, u)) out.push_back({m.action, m.target, Rule::Constant});
        return;
      }
      case TermKind::Choice:
        for (auto& m : moves(t.left(), unfold)) out.push_back({m.action, m.target, Rule::ChoiceL});
        for (auto& m : moves(t.right(), unfold)) out.push_back({m.action, m.target, Rule::ChoiceR});
        return;
      case TermKind::Coop: {
        auto lm = moves(t.left(), unfold);
        auto rm = moves(t.right(), unfold);
        for (const auto& m : lm) out.push_back({m.action, Term::coop(m.target, t.right()), Rule::CoopL});
        for (const auto& m : rm) out.push_back({m.action, Term::coop(t.left(), m.target), Rule::CoopR});
        for (const auto& l : lm)
          for (const auto& r : rm)
            if (l.action.complements(r.action))
              out.push_back({Label::tau(), Term::coop(l.target, r.target), Rule::CoopSync});
        return;
      }
      case TermKind::Hide:
        for (auto& m : moves(t.body(), unfold)) {
          if (m.action.is_named() && t.hidden().count(m.action)) continue;
          out.push_back({m.action, Term::hide(m.target, t.hidden()), Rule::Hiding});
        }
        return;
      case TermKind::Fuse: {
        const Term& left = t.left();
        const Term& right = t.right();
        if (auto partner = annihilation_partner(left); partner && *partner == right)
          out.push_back({left.label(), Term::nil(), Rule::FuseAnnihilate});
        if (auto partner = annihilation_partner(right); partner && *partner == left)
          out.push_back({right.label(), Term::nil(), Rule::FuseAnnihilate});
        auto lm = moves(left, unfold);
        auto rm = moves(right, unfold);
        for (const auto& l : lm) {
          bool common = std::any_of(rm.begin(), rm.end(), [&](const Move& r) {
            return r.action == l.action && r.target == l.target;
          });
          if (common) {
            out.push_back({l.action, l.target, Rule::FuseJoinL});
            out.push_back({l.action, l.target, Rule::FuseJoinR});
          }
        }
        for (const auto& l : lm) out.push_back({l.action, spread(l), Rule::FuseSpreadL});
        for (const auto& r : rm) out.push_back({r.action, spread(r), Rule::FuseSpreadR});
        return;
      }
    }
  }

  // Nil + C(a) + P'
  static Term spread(const Move& m) {
    return Term::choice(Term::choice(Term::nil(), Term::diffuse(m.action)), m.target);
  }

  const Environment& env_;
  std::size_t max_unfold_;
  mutable std::vector<Label> open_diffusions_;
};

}  // namespace

std::string_view rule_name(Rule rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

Rule rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  throw Error("unknown rule '" + std::string(name) + "'");
}

std::vector<Transition> derive_transitions(const Term& term, const Environment& env,
                                           std::size_t max_unfold) {
  Deriver d(env, max_unfold);
  std::vector<Transition> out;
  for (auto& m : d.moves(term, 0)) out.push_back({term, m.action, m.target, m.rule});
  return out;
}

bool replays(const Transition& t, const Environment& env, std::size_t max_unfold) {
  Deriver d(env, max_unfold);
  const Term& s = t.source;
  auto kind_is = [&](TermKind k) { return s.kind() == k; };
  switch (t.rule) {
    case Rule::Prefix:
      return kind_is(TermKind::Prefix) && s.label() == t.action && s.body() == t.target;
    case Rule::PrefixA:
      return kind_is(TermKind::Attract) && env.lookup_attract(s.label()) == t.action &&
             s.body() == t.target;
    case Rule::PrefixR:
      return kind_is(TermKind::Repel) && env.lookup_repel(s.label()) == t.action &&
             s.body() == t.target;
    case Rule::Diffusion: {
      if (!kind_is(TermKind::Diffuse)) return false;
      auto bound = env.lookup_diffusion(s.label());
      if (!bound) return false;
      for (const auto& m : d.diffusion_moves(s.label(), *bound, 1))
        if (m.action == t.action && m.target == t.target) return true;
      return false;
    }
    case Rule::Constant:
      return kind_is(TermKind::Const) && env.has_constant(s.name()) &&
             d.can(env.resolve_constant(s.name()), t.action, t.target, 1);
    case Rule::ChoiceL:
      return kind_is(TermKind::Choice) && d.can(s.left(), t.action, t.target, 0);
    case Rule::ChoiceR:
      return kind_is(TermKind::Choice) && d.can(s.right(), t.action, t.target, 0);
    case Rule::CoopL:
      return kind_is(TermKind::Coop) && t.target.kind() == TermKind::Coop &&
             t.target.right() == s.right() && d.can(s.left(), t.action, t.target.left(), 0);
    case Rule::CoopR:
      return kind_is(TermKind::Coop) && t.target.kind() == TermKind::Coop &&
             t.target.left() == s.left() && d.can(s.right(), t.action, t.target.right(), 0);
    case Rule::CoopSync: {
      if (!kind_is(TermKind::Coop) || !t.action.is_tau() || t.target.kind() != TermKind::Coop)
        return false;
      for (const auto& l : d.moves(s.left(), 0)) {
        if (l.target != t.target.left() || l.action.is_tau()) continue;
        if (d.can(s.right(), l.action.complement(), t.target.right(), 0)) return true;
      }
      return false;
    }
    case Rule::Hiding:
      return kind_is(TermKind::Hide) && t.target.kind() == TermKind::Hide &&
             t.target.hidden() == s.hidden() &&
             (t.action.is_tau() || !s.hidden().count(t.action)) &&
             d.can(s.body(), t.action, t.target.body(), 0);
    case Rule::FuseAnnihilate: {
      if (!kind_is(TermKind::Fuse) || !t.target.is_nil()) return false;
      auto check = [&](const Term& pre, const Term& other) {
        auto partner = Deriver::annihilation_partner(pre);
        return partner && *partner == other && pre.label() == t.action;
      };
      return check(s.left(), s.right()) || check(s.right(), s.left());
    }
    case Rule::FuseJoinL:
    case Rule::FuseJoinR:
      return kind_is(TermKind::Fuse) && d.can(s.left(), t.action, t.target, 0) &&
             d.can(s.right(), t.action, t.target, 0);
    case Rule::FuseSpreadL:
    case Rule::FuseSpreadR: {
      if (!kind_is(TermKind::Fuse)) return false;
      const Term& x = t.target;
      if (x.kind() != TermKind::Choice || x.left().kind() != TermKind::Choice) return false;
      const Term& inner = x.left();
      if (!inner.left().is_nil() || inner.right() != Term::diffuse(t.action)) return false;
      const Term& side = t.rule == Rule::FuseSpreadL ? s.left() : s.right();
      return d.can(side, t.action, x.right(), 0);
    }
  }
  return false;
}

}  // namespace physarum
