#pragma once

#include <cstddef>
#include <vector>

#include "physarum/environment.hpp"
#include "physarum/label.hpp"
#include "physarum/lts.hpp"

namespace physarum {

struct Arc {
  StateId source;
  Label action;
  StateId target;
};

/// Bare action-labelled graph; what bisimilarity actually looks at.
struct LabelledGraph {
  std::size_t size = 0;
  std::vector<Arc> arcs;
};

LabelledGraph graph_of(const Lts& lts);
/// States of `b` are renumbered after those of `a`.
LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b);

/// Disjoint blocks covering all states. Blocks are numbered in order of their
/// smallest member, so equal partitions have equal block vectors.
class Partition {
 public:
  explicit Partition(const std::vector<std::size_t>& block_of);

  std::size_t block(StateId s) const { return block_of_[s]; }
  bool same_block(StateId a, StateId b) const { return block_of_[a] == block_of_[b]; }
  std::size_t num_blocks() const { return num_blocks_; }
  std::size_t num_states() const { return block_of_.size(); }
  std::vector<std::vector<StateId>> blocks() const;
  const std::vector<std::size_t>& block_vector() const { return block_of_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t num_blocks_ = 0;
};

/// Coarsest strong bisimulation by signature refinement: states are split by
/// their set of (action, successor block) pairs until nothing changes.
Partition bisimilarity(const LabelledGraph& g);
Partition bisimilarity(const Lts& lts);

/// Every intermediate partition of the refinement, starting from the single
/// block; the last entry is the bisimilarity partition.
std::vector<Partition> refinement_rounds(const LabelledGraph& g);

/// Greatest fixed point by deleting pairs that violate the transfer
/// condition, starting from all pairs. Throws SizeLimit above 200 states.
Partition naive_bisim(const LabelledGraph& g);
Partition naive_bisim(const Lts& lts);

/// One attacker move of a distinguishing play.
struct DistinguishingMove {
  Label action;
  bool on_left;  // the move is made by the first process
};

struct BisimVerdict {
  bool bisimilar = false;
  /// Either LTS hit an exploration bound.
  bool approximate = false;
  /// Attacker moves of a winning play when not bisimilar. The last move is
  /// one the other side cannot answer at all.
  std::vector<DistinguishingMove> distinguishing;
};

BisimVerdict compare_roots(const Lts& a, const Lts& b);
BisimVerdict bisimilar_terms(const Term& a, const Term& b, const Environment& env,
                             const Bounds& bounds);

}  // namespace physarum
