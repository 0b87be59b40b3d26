#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "physarum/environment.hpp"
#include "physarum/streams.hpp"

namespace physarum {

enum class FormulaKind { Var, Top, Bottom, Not, Or, And, Implies };

/// Pointwise trace formula over named state streams.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula disjunction(Formula a, Formula b);
  static Formula conjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);

  FormulaKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& operand() const { return *node_->left; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  std::set<std::string> variables() const;
  std::size_t depth() const;

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// `T`, `F`, `!f`, `f & g`, `f | g`, `f -> g`; `!` binds tightest, `->` is
/// right-associative and loosest.
Formula parse_formula(std::string_view text);
std::string format(const Formula& f);

using StreamEnv = std::map<std::string, RationalStream>;

/// Truth stream of `f`: each variable's state stream mapped through the
/// valuation of the proposition with the same name, then connectives applied
/// element by element. Finite operands truncate the result to the shortest.
RationalStream eval_formula(const Formula& f, const StreamEnv& env, const Valuation& val);

}  // namespace physarum
