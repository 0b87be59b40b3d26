#include "physarum/connectives.hpp"

#include <algorithm>

#include "physarum/error.hpp"
#include "physarum/syntax.hpp"

namespace physarum {

DerivedConnectives::DerivedConnectives(LabelSet universe) : universe_(std::move(universe)) {
  if (universe_.empty()) throw SortOutOfUniverse("the universe of active zones is empty");
}

const LabelSet& DerivedConnectives::checked(const LabelSet& s) const {
  if (!std::includes(universe_.begin(), universe_.end(), s.begin(), s.end()))
    throw SortOutOfUniverse("sort " + to_string(s) + " is not within " + to_string(universe_));
  return s;
}

LabelSet DerivedConnectives::hide(const LabelSet& p, const LabelSet& q) const {
  return set_difference(checked(p), checked(q));
}

LabelSet DerivedConnectives::neg(const LabelSet& p) const { return hide(universe_, p); }

LabelSet DerivedConnectives::conj(const LabelSet& p, const LabelSet& q) const {
  return hide(p, hide(universe_, q));
}

LabelSet DerivedConnectives::disj(const LabelSet& p, const LabelSet& q) const {
  return hide(universe_, hide(hide(universe_, p), q));
}

LabelSet DerivedConnectives::impl(const LabelSet& p, const LabelSet& q) const {
  return hide(universe_, hide(p, q));
}

LabelSet DerivedConnectives::neg(const Term& p, const Environment& env) const {
  return neg(sort(p, env));
}

LabelSet DerivedConnectives::conj(const Term& p, const Term& q, const Environment& env) const {
  return conj(sort(p, env), sort(q, env));
}

LabelSet DerivedConnectives::disj(const Term& p, const Term& q, const Environment& env) const {
  return disj(sort(p, env), sort(q, env));
}

LabelSet DerivedConnectives::impl(const Term& p, const Term& q, const Environment& env) const {
  return impl(sort(p, env), sort(q, env));
}

}  // namespace physarum
