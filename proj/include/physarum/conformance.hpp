#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "physarum/environment.hpp"
#include "physarum/term.hpp"

namespace physarum {

inline constexpr int kLawCount = 14;

/// Human-readable statement of congruence law `n` (1..14).
std::string_view law_statement(int law);

/// Both sides of law `n` instantiated with P, Q, R and hidden set H.
std::pair<Term, Term> law_instance(int law, const Term& p, const Term& q, const Term& r,
                                   const LabelSet& hidden);

struct ConformanceParams {
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::size_t max_depth = 3;
  /// Label names; empty means the environment's universe, or {a, b}.
  std::vector<std::string> alphabet;
  Bounds bounds{2000, 200, 64};
};

struct LawInstance {
  Term lhs;
  Term rhs;
  bool holds = false;
  bool approximate = false;
};

struct LawRow {
  int law = 0;
  std::size_t holds = 0;
  std::size_t total = 0;
  std::vector<LawInstance> counterexamples;
  bool verdict() const { return holds == total; }
};

struct ConformanceReport {
  std::vector<LawRow> rows;
  /// `law <n> <holds|fails> <k>/<total>` lines, each failing law followed by
  /// `cex <lhs> ;; <rhs>` lines.
  std::string to_text() const;
};

/// Checks every law's two sides under strong bisimilarity of their LTSs on
/// seeded random instantiations. Sample i uses the same P, Q, R, H for all laws.
ConformanceReport law_conformance(const ConformanceParams& params, const Environment& env);

}  // namespace physarum
