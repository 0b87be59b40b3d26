#pragma once

#include "physarum/environment.hpp"
#include "physarum/label.hpp"
#include "physarum/term.hpp"

namespace physarum {

/// Boolean connectives built from hiding alone, with `1` the universe and a
/// process standing for its sort:
///
///   neg P  = 1 \ P            conj P Q = P \ (1 \ Q)
///   disj P Q = 1 \ ((1 \ P) \ Q)    impl P Q = 1 \ (P \ Q)
class DerivedConnectives {
 public:
  /// Throws SortOutOfUniverse if `universe` is empty.
  explicit DerivedConnectives(LabelSet universe);

  const LabelSet& one() const { return universe_; }

  /// P \ Q on sorts.
  LabelSet hide(const LabelSet& p, const LabelSet& q) const;

  LabelSet neg(const LabelSet& p) const;
  LabelSet conj(const LabelSet& p, const LabelSet& q) const;
  LabelSet disj(const LabelSet& p, const LabelSet& q) const;
  LabelSet impl(const LabelSet& p, const LabelSet& q) const;

  LabelSet neg(const Term& p, const Environment& env) const;
  LabelSet conj(const Term& p, const Term& q, const Environment& env) const;
  LabelSet disj(const Term& p, const Term& q, const Environment& env) const;
  LabelSet impl(const Term& p, const Term& q, const Environment& env) const;

 private:
  const LabelSet& checked(const LabelSet& s) const;

  LabelSet universe_;
};

}  // namespace physarum
