#include "physarum/streams.hpp"

#include <algorithm>
#include <map>

#include "physarum/error.hpp"

namespace physarum {

ElementKind kind_of(const Element& e) { return static_cast<ElementKind>(e.index()); }

std::string to_string(const Element& e) {
  switch (kind_of(e)) {
    case ElementKind::State:
      return "s" + std::to_string(std::get<StateRef>(e).id);
    case ElementKind::Label:
      return std::get<Label>(e).to_string();
    case ElementKind::Truth:
      return std::get<bool>(e) ? "T" : "F";
  }
  return {};
}

RationalStream RationalStream::finite(ElementKind kind, std::vector<Element> elements) {
  RationalStream s(kind);
  s.prefix_ = std::move(elements);
  s.canonicalize();
  return s;
}

RationalStream RationalStream::lasso(ElementKind kind, std::vector<Element> prefix,
                                     std::vector<Element> cycle) {
  if (cycle.empty()) throw std::invalid_argument("lasso needs a nonempty cycle");
  RationalStream s(kind);
  s.prefix_ = std::move(prefix);
  s.cycle_ = std::move(cycle);
  s.canonicalize();
  return s;
}

RationalStream RationalStream::constant(const Element& e) {
  return lasso(kind_of(e), {}, {e});
}

void RationalStream::canonicalize() {
  for (const auto* part : {&prefix_, &cycle_})
    for (const auto& e : *part)
      if (kind_of(e) != kind_) throw KindMismatch("stream element of the wrong kind");
  if (cycle_.empty()) return;

  // Shortest period of the cycle.
  const std::size_t n = cycle_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - d];
    if (periodic) {
      cycle_.resize(d);
      break;
    }
  }
  // Absorb prefix elements that already repeat the cycle.
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

std::optional<std::size_t> RationalStream::length() const {
  if (!cycle_.empty()) return std::nullopt;
  return prefix_.size();
}

const Element& RationalStream::head() const {
  if (empty()) throw EmptyStream();
  return nth(0);
}

RationalStream RationalStream::derivative() const {
  if (empty()) throw EmptyStream();
  return drop(*this, 1);
}

const Element& RationalStream::nth(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (cycle_.empty())
    throw IndexOutOfRange("index " + std::to_string(n) + " past end of stream of length " +
                          std::to_string(prefix_.size()));
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

std::vector<Element> RationalStream::unroll(std::size_t n) const {
  if (auto len = length()) n = std::min(n, *len);
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(nth(i));
  return out;
}

std::string RationalStream::to_string() const {
  if (empty()) return "<>";
  std::string out;
  for (const auto& e : prefix_) {
    if (!out.empty()) out += ' ';
    out += physarum::to_string(e);
  }
  if (!cycle_.empty()) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
      if (i > 0) out += ' ';
      out += physarum::to_string(cycle_[i]);
    }
    out += ")^w";
  }
  return out;
}

RationalStream drop(const RationalStream& s, std::size_t n) {
  const auto& p = s.prefix();
  const auto& c = s.cycle();
  if (c.empty()) {
    if (n > p.size()) throw EmptyStream();
    return RationalStream::finite(s.kind(), {p.begin() + static_cast<std::ptrdiff_t>(n), p.end()});
  }
  if (n <= p.size())
    return RationalStream::lasso(s.kind(), {p.begin() + static_cast<std::ptrdiff_t>(n), p.end()}, c);
  std::vector<Element> rotated = c;
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>((n - p.size()) % c.size()),
              rotated.end());
  return RationalStream::lasso(s.kind(), {}, std::move(rotated));
}

namespace {

// Positions are canonical indices: below prefix+cycle length, or `end` once a
// finite stream is exhausted.
struct Cursor {
  const RationalStream& s;
  std::size_t span() const { return s.prefix().size() + s.cycle().size(); }
  bool ended(std::size_t i) const { return s.is_finite() && i >= s.prefix().size(); }
  std::size_t next(std::size_t i) const {
    if (s.is_finite()) return i + 1;
    return i + 1 < span() ? i + 1 : s.prefix().size();
  }
};

}  // namespace

StreamComparison stream_equal(const RationalStream& a, const RationalStream& b) {
  if (a.kind() != b.kind()) throw KindMismatch("comparing streams of different element kinds");
  Cursor ca{a};
  Cursor cb{b};
  StreamComparison out;
  std::set<std::pair<std::size_t, std::size_t>> visited;
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t step = 0;; ++step) {
    if (visited.count({i, j})) {
      out.equal = true;
      return out;
    }
    bool ea = ca.ended(i);
    bool eb = cb.ended(j);
    if (ea && eb) {
      out.equal = true;
      return out;
    }
    if (ea || eb || a.nth(i) != b.nth(j)) {
      out.mismatch = step;
      return out;
    }
    visited.insert({i, j});
    out.witness.emplace_back(i, j);
    i = ca.next(i);
    j = cb.next(j);
  }
}

bool is_valid_fragment(const ExecutionFragment& f, const Lts& lts) {
  if (f.states.empty()) return false;
  const std::size_t steps = f.states.size() - 1 + (f.loop_to ? 1 : 0);
  if (f.actions.size() != steps) return false;
  if (f.loop_to && *f.loop_to >= f.states.size()) return false;
  for (StateId s : f.states)
    if (s >= lts.size()) return false;
  for (std::size_t i = 0; i < steps; ++i) {
    StateId from = f.states[i];
    StateId to = i + 1 < f.states.size() ? f.states[i + 1] : f.states[*f.loop_to];
    auto out = lts.outgoing(from);
    bool ok = std::any_of(out.begin(), out.end(), [&](const Edge& e) {
      return e.action == f.actions[i] && e.target == to;
    });
    if (!ok) return false;
  }
  return true;
}

RationalStream trace_of(const ExecutionFragment& f) {
  std::vector<Element> all(f.actions.begin(), f.actions.end());
  if (!f.loop_to) return RationalStream::finite(ElementKind::Label, std::move(all));
  auto split = all.begin() + static_cast<std::ptrdiff_t>(*f.loop_to);
  return RationalStream::lasso(ElementKind::Label, {all.begin(), split}, {split, all.end()});
}

RationalStream state_stream_of(const ExecutionFragment& f) {
  std::vector<Element> all;
  for (StateId s : f.states) all.emplace_back(StateRef{s});
  if (!f.loop_to) return RationalStream::finite(ElementKind::State, std::move(all));
  auto split = all.begin() + static_cast<std::ptrdiff_t>(*f.loop_to);
  return RationalStream::lasso(ElementKind::State, {all.begin(), split}, {split, all.end()});
}

namespace {

class FragmentWalker {
 public:
  FragmentWalker(const Lts& lts, std::size_t bound) : lts_(lts), bound_(bound) {}

  void walk(StateId s) {
    if (result.truncated) return;
    on_path_[s] = path_.states.size();
    path_.states.push_back(s);

    std::vector<std::pair<Label, StateId>> moves;
    for (const auto& e : lts_.outgoing(s)) moves.emplace_back(e.action, e.target);
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());

    if (moves.empty()) emit(std::nullopt);
    for (const auto& [action, target] : moves) {
      if (result.truncated) break;
      path_.actions.push_back(action);
      if (auto it = on_path_.find(target); it != on_path_.end())
        emit(it->second);
      else
        walk(target);
      path_.actions.pop_back();
    }

    path_.states.pop_back();
    on_path_.erase(s);
  }

  FragmentSet result;

 private:
  void emit(std::optional<std::size_t> loop_to) {
    if (result.fragments.size() >= bound_) {
      result.truncated = true;
      return;
    }
    ExecutionFragment f = path_;
    f.loop_to = loop_to;
    result.fragments.push_back(std::move(f));
  }

  const Lts& lts_;
  std::size_t bound_;
  ExecutionFragment path_;
  std::map<StateId, std::size_t> on_path_;
};

}  // namespace

FragmentSet execution_fragments(const Lts& lts, StateId start, std::size_t bound) {
  if (start >= lts.size()) throw IndexOutOfRange("no state " + std::to_string(start));
  FragmentWalker w(lts, bound);
  w.walk(start);
  return std::move(w.result);
}

StreamSet state_streams(const Lts& lts, StateId start, std::size_t bound) {
  auto frags = execution_fragments(lts, start, bound);
  StreamSet out;
  out.truncated = frags.truncated;
  for (const auto& f : frags.fragments) {
    auto s = state_stream_of(f);
    if (std::find(out.streams.begin(), out.streams.end(), s) == out.streams.end())
      out.streams.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Label>> bounded_traces(const Lts& lts, StateId start, std::size_t max_len) {
  if (start >= lts.size()) throw IndexOutOfRange("no state " + std::to_string(start));
  std::vector<std::vector<Label>> out;
  std::map<std::vector<Label>, std::set<StateId>> level{{{}, {start}}};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::map<std::vector<Label>, std::set<StateId>> next;
    for (const auto& [trace, states] : level) {
      for (StateId s : states) {
        for (const auto& e : lts.outgoing(s)) {
          auto extended = trace;
          extended.push_back(e.action);
          next[extended].insert(e.target);
        }
      }
    }
    for (const auto& [trace, states] : next) out.push_back(trace);
    level = std::move(next);
  }
  return out;
}

}  // namespace physarum
