#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "physarum/environment.hpp"
#include "physarum/label.hpp"
#include "physarum/lts.hpp"

namespace physarum {

struct StateRef {
  StateId id;
  friend auto operator<=>(const StateRef&, const StateRef&) = default;
};

enum class ElementKind { State, Label, Truth };

using Element = std::variant<StateRef, Label, bool>;

ElementKind kind_of(const Element& e);
std::string to_string(const Element& e);

/// Finite or eventually periodic stream, stored as prefix + cycle in the
/// unique shortest such form.
class RationalStream {
 public:
  /// The empty stream of the given kind.
  explicit RationalStream(ElementKind kind) : kind_(kind) {}

  static RationalStream finite(ElementKind kind, std::vector<Element> elements);
  /// `cycle` must be nonempty.
  static RationalStream lasso(ElementKind kind, std::vector<Element> prefix,
                              std::vector<Element> cycle);
  static RationalStream constant(const Element& e);

  ElementKind kind() const { return kind_; }
  const std::vector<Element>& prefix() const { return prefix_; }
  const std::vector<Element>& cycle() const { return cycle_; }
  bool is_finite() const { return cycle_.empty(); }
  bool empty() const { return prefix_.empty() && cycle_.empty(); }
  /// Number of elements, or nullopt for infinite streams.
  std::optional<std::size_t> length() const;

  const Element& head() const;
  RationalStream derivative() const;
  const Element& nth(std::size_t n) const;
  /// First min(n, length) elements.
  std::vector<Element> unroll(std::size_t n) const;

  /// `a b (c d)^w`; finite streams omit the cycle, the empty stream is `<>`.
  std::string to_string() const;

  friend bool operator==(const RationalStream&, const RationalStream&) = default;

 private:
  void canonicalize();

  ElementKind kind_;
  std::vector<Element> prefix_;
  std::vector<Element> cycle_;
};

/// Coinductive comparison result. `witness` holds the visited position
/// pairs (i, j): the i-th derivative of the first stream related to the j-th
/// derivative of the second. On failure `mismatch` is the first differing index.
struct StreamComparison {
  bool equal = false;
  std::vector<std::pair<std::size_t, std::size_t>> witness;
  std::optional<std::size_t> mismatch;
};

/// Decides equality by synchronized exploration of position pairs; throws
/// KindMismatch for streams of different element kinds.
StreamComparison stream_equal(const RationalStream& a, const RationalStream& b);

/// n-fold derivative.
RationalStream drop(const RationalStream& s, std::size_t n);

/// p0 a1 p1 a2 ... ; a lasso when `loop_to` is set, in which case the last
/// action leads from states.back() back to states[*loop_to].
struct ExecutionFragment {
  std::vector<StateId> states;
  std::vector<Label> actions;
  std::optional<std::size_t> loop_to;

  friend bool operator==(const ExecutionFragment&, const ExecutionFragment&) = default;
};

bool is_valid_fragment(const ExecutionFragment& f, const Lts& lts);
RationalStream trace_of(const ExecutionFragment& f);
RationalStream state_stream_of(const ExecutionFragment& f);

struct FragmentSet {
  std::vector<ExecutionFragment> fragments;
  bool truncated = false;
};

/// Maximal fragments from `start`: paths to a deadlock, and lassos closed at
/// the first revisited state. Stops after `bound` fragments.
FragmentSet execution_fragments(const Lts& lts, StateId start, std::size_t bound);

struct StreamSet {
  std::vector<RationalStream> streams;
  bool truncated = false;
};

/// Distinct state streams of the maximal fragments from `start`.
StreamSet state_streams(const Lts& lts, StateId start, std::size_t bound);

/// Distinct label traces of length 1..max_len from `start`, ordered by
/// length then lexicographically.
std::vector<std::vector<Label>> bounded_traces(const Lts& lts, StateId start, std::size_t max_len);

}  // namespace physarum
