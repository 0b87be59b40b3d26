#include "physarum/bisimulation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "physarum/error.hpp"

namespace physarum {

Partition::Partition(const std::vector<std::size_t>& block_of) : block_of_(block_of.size()) {
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t s = 0; s < block_of.size(); ++s) {
    auto [it, inserted] = renumber.emplace(block_of[s], renumber.size());
    block_of_[s] = it->second;
  }
  num_blocks_ = renumber.size();
}

std::vector<std::vector<StateId>> Partition::blocks() const {
  std::vector<std::vector<StateId>> out(num_blocks_);
  for (StateId s = 0; s < block_of_.size(); ++s) out[block_of_[s]].push_back(s);
  return out;
}

LabelledGraph graph_of(const Lts& lts) {
  LabelledGraph g;
  g.size = lts.size();
  g.arcs.reserve(lts.transitions().size());
  for (const auto& e : lts.transitions()) g.arcs.push_back({e.source, e.action, e.target});
  return g;
}

LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b) {
  LabelledGraph g = a;
  g.size = a.size + b.size;
  for (const auto& arc : b.arcs) g.arcs.push_back({arc.source + a.size, arc.action, arc.target + a.size});
  return g;
}

namespace {

using Successors = std::vector<std::vector<std::pair<std::size_t, StateId>>>;

// Actions interned by label order so signatures compare as integers.
Successors successors(const LabelledGraph& g) {
  std::map<Label, std::size_t> ids;
  for (const auto& a : g.arcs) ids.emplace(a.action, 0);
  std::size_t next = 0;
  for (auto& [label, id] : ids) id = next++;
  Successors succ(g.size);
  for (const auto& a : g.arcs) {
    if (a.source >= g.size || a.target >= g.size) throw std::out_of_range("arc outside graph");
    succ[a.source].emplace_back(ids.at(a.action), a.target);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return succ;
}

}  // namespace

std::vector<Partition> refinement_rounds(const LabelledGraph& g) {
  const Successors succ = successors(g);
  std::vector<std::size_t> block(g.size, 0);
  std::vector<Partition> rounds{Partition(block)};
  std::size_t count = g.size == 0 ? 0 : 1;

  using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
  for (;;) {
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(g.size);
    for (StateId s = 0; s < g.size; ++s) {
      Signature sig{block[s], {}};
      for (const auto& [action, target] : succ[s]) sig.second.emplace_back(action, block[target]);
      std::sort(sig.second.begin(), sig.second.end());
      sig.second.erase(std::unique(sig.second.begin(), sig.second.end()), sig.second.end());
      auto [it, inserted] = ids.emplace(std::move(sig), ids.size());
      next[s] = it->second;
    }
    if (ids.size() == count) break;
    count = ids.size();
    block = std::move(next);
    rounds.emplace_back(block);
  }
  return rounds;
}

Partition bisimilarity(const LabelledGraph& g) { return refinement_rounds(g).back(); }

Partition bisimilarity(const Lts& lts) { return bisimilarity(graph_of(lts)); }

Partition naive_bisim(const LabelledGraph& g) {
  if (g.size > 200) throw SizeLimit("naive bisimulation is limited to 200 states");
  const Successors succ = successors(g);
  const std::size_t n = g.size;
  std::vector<char> rel(n * n, 1);
  auto related = [&](StateId a, StateId b) { return rel[a * n + b] != 0; };

  // Every move of `a` must be matched by an equally labelled move of `b` into a related state.
  auto simulates = [&](StateId a, StateId b) {
    for (const auto& [action, a2] : succ[a]) {
      bool matched = false;
      for (const auto& [action_b, b2] : succ[b]) {
        if (action_b == action && related(a2, b2)) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (StateId a = 0; a < n; ++a) {
      for (StateId b = 0; b < n; ++b) {
        if (!related(a, b)) continue;
        if (!simulates(a, b) || !simulates(b, a)) {
          rel[a * n + b] = 0;
          rel[b * n + a] = 0;
          changed = true;
        }
      }
    }
  }

  std::vector<std::size_t> block(n);
  for (StateId a = 0; a < n; ++a) {
    block[a] = a;
    for (StateId b = 0; b < a; ++b) {
      if (related(a, b)) {
        block[a] = block[b];
        break;
      }
    }
  }
  return Partition(block);
}

Partition naive_bisim(const Lts& lts) { return naive_bisim(graph_of(lts)); }

namespace {

// Attacker strategy read off the refinement rounds: from a pair first split
// in round k there is a move whose every answer leads to a pair split earlier.
// The defender answers with the pair that survives longest.
std::vector<DistinguishingMove> distinguish(const LabelledGraph& g, StateId left, StateId right) {
  const auto rounds = refinement_rounds(g);
  auto split_round = [&](StateId a, StateId b) {
    for (std::size_t k = 0; k < rounds.size(); ++k)
      if (!rounds[k].same_block(a, b)) return k;
    return rounds.size();
  };
  std::vector<std::vector<const Arc*>> out(g.size);
  for (const auto& a : g.arcs) out[a.source].push_back(&a);

  std::vector<DistinguishingMove> play;
  StateId s = left;
  StateId t = right;
  while (true) {
    std::size_t k = split_round(s, t);
    if (k == 0 || k >= rounds.size()) break;
    const Partition& prev = rounds[k - 1];
    bool found = false;
    for (int side = 0; side < 2 && !found; ++side) {
      StateId x = side == 0 ? s : t;
      StateId y = side == 0 ? t : s;
      for (const Arc* move : out[x]) {
        std::optional<StateId> best;
        std::size_t best_round = 0;
        bool answerable = false;
        for (const Arc* answer : out[y]) {
          if (answer->action != move->action) continue;
          if (prev.same_block(move->target, answer->target)) {
            answerable = true;
            break;
          }
          std::size_t r = split_round(move->target, answer->target);
          if (!best || r > best_round) {
            best = answer->target;
            best_round = r;
          }
        }
        if (answerable) continue;
        play.push_back({move->action, side == 0});
        found = true;
        if (!best) return play;
        if (side == 0) {
          s = move->target;
          t = *best;
        } else {
          s = *best;
          t = move->target;
        }
        break;
      }
    }
    if (!found) break;
  }
  return play;
}

}  // namespace

BisimVerdict compare_roots(const Lts& a, const Lts& b) {
  LabelledGraph g = disjoint_union(graph_of(a), graph_of(b));
  Partition p = bisimilarity(g);
  BisimVerdict v;
  v.approximate = a.truncated() || b.truncated();
  v.bisimilar = p.same_block(0, a.size());
  if (!v.bisimilar) v.distinguishing = distinguish(g, 0, a.size());
  return v;
}

BisimVerdict bisimilar_terms(const Term& a, const Term& b, const Environment& env,
                             const Bounds& bounds) {
  return compare_roots(build_lts(a, env, bounds), build_lts(b, env, bounds));
}

}  // namespace physarum
