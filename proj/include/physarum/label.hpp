#pragma once

#include <compare>
#include <set>
#include <string>

namespace physarum {

enum class Polarity { Activator, Inhibitor };

/// An action: a named activator `a`, its inhibitor `~a`, or the internal action `tau`.
class Label {
 public:
  static Label named(std::string name, Polarity polarity = Polarity::Activator);
  static Label inhibitor(std::string name) { return named(std::move(name), Polarity::Inhibitor); }
  static Label tau();

  bool is_tau() const { return tau_; }
  bool is_named() const { return !tau_; }
  const std::string& name() const { return name_; }
  Polarity polarity() const { return polarity_; }

  /// The complementary action; throws std::logic_error for tau.
  Label complement() const;
  bool complements(const Label& other) const;

  std::string to_string() const;

  // Named labels order by (name, polarity); tau sorts last.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b) = default;

 private:
  Label() = default;

  bool tau_ = false;
  std::string name_;
  Polarity polarity_ = Polarity::Activator;
};

using LabelSet = std::set<Label>;

LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);
std::string to_string(const LabelSet& set);

}  // namespace physarum
