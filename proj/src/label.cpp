#include "physarum/label.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace physarum {

Label Label::named(std::string name, Polarity polarity) {
  if (name.empty() || name == "tau") throw std::invalid_argument("invalid label name '" + name + "'");
  Label l;
  l.name_ = std::move(name);
  l.polarity_ = polarity;
  return l;
}

Label Label::tau() {
  Label l;
  l.tau_ = true;
  return l;
}

Label Label::complement() const {
  if (tau_) throw std::logic_error("tau has no complement");
  return named(name_, polarity_ == Polarity::Activator ? Polarity::Inhibitor : Polarity::Activator);
}

bool Label::complements(const Label& other) const {
  return !tau_ && !other.tau_ && name_ == other.name_ && polarity_ != other.polarity_;
}

std::string Label::to_string() const {
  if (tau_) return "tau";
  return polarity_ == Polarity::Inhibitor ? "~" + name_ : name_;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (a.tau_ != b.tau_) return a.tau_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return a.polarity_ <=> b.polarity_;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string to_string(const LabelSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : set) {
    if (!first) out += ", ";
    out += l.to_string();
    first = false;
  }
  return out + "}";
}

}  // namespace physarum
