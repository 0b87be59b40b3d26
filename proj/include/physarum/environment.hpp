#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "physarum/label.hpp"
#include "physarum/term.hpp"

namespace physarum {

using StateId = std::size_t;

/// Truth of atomic propositions at LTS states: (proposition, state) -> value.
using Valuation = std::map<std::pair<std::string, StateId>, bool>;

struct Bounds {
  std::size_t max_states = 10000;
  std::size_t max_depth = 1000;
  std::size_t max_unfold = 64;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// The scene a term runs in: alphabet, attractant/repellent tables, diffusion
/// bindings and constant definitions. A value type; bind_diffusion copies.
class Environment {
 public:
  const LabelSet& universe() const { return universe_; }
  /// True when a `universe` line was given; A/R entries are then checked against it.
  bool universe_declared() const { return universe_declared_; }
  void declare_universe(const LabelSet& names);

  std::optional<Label> lookup_attract(const Label& label) const;
  std::optional<Label> lookup_repel(const Label& label) const;
  void set_attract(const Label& from, const Label& to) { attract_.insert_or_assign(from, to); }
  void set_repel(const Label& from, const Label& to) { repel_.insert_or_assign(from, to); }

  std::optional<Term> lookup_diffusion(const Label& label) const;
  /// C(label) ::= term. Rebinding to the same term is a no-op; to a different
  /// term throws DiffusionConflict.
  Environment bind_diffusion(const Label& label, const Term& term) const;

  bool has_constant(const std::string& name) const { return constants_.count(name) > 0; }
  const Term& resolve_constant(const std::string& name) const;
  void define_constant(const std::string& name, const Term& body);

  const std::map<Label, Label>& attract_table() const { return attract_; }
  const std::map<Label, Label>& repel_table() const { return repel_; }
  const std::map<Label, Term>& diffusion_table() const { return diffusion_; }
  const std::map<std::string, Term>& constants() const { return constants_; }

  Bounds bounds;
  Valuation valuation;

  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  LabelSet universe_;
  bool universe_declared_ = false;
  std::map<Label, Label> attract_;
  std::map<Label, Label> repel_;
  std::map<Label, Term> diffusion_;
  std::map<std::string, Term> constants_;
};

/// Parses a `.scene` file. Throws SceneError naming the first offending line.
Environment load_scene(std::string_view text);
/// Scene text that load_scene maps back to an equal Environment.
std::string save_scene(const Environment& env);

/// Adds the definitions of a term file; a name defined differently twice is an error.
void merge_definitions(Environment& env,
                       const std::vector<std::pair<std::string, Term>>& definitions);

}  // namespace physarum
