#include "physarum/conformance.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "physarum/bisimulation.hpp"
#include "physarum/generator.hpp"
#include "physarum/lts.hpp"
#include "physarum/syntax.hpp"

namespace physarum {

namespace {

constexpr std::array<std::string_view, kLawCount> kStatements = {
    "0 \\ H = 0",
    "P & ~P = 0",
    "P & P = P",
    "P & 0 = 0",
    "(P + Q) \\ H = P \\ H + Q \\ H",
    "(P & Q) \\ H = P \\ H & Q \\ H",
    "P & Q = Q & P",
    "P & (Q & R) = (P & Q) & R",
    "P + P = P",
    "P + 0 = P",
    "P + Q = Q + P",
    "P + (Q + R) = (P + Q) + R",
    "P & (Q + R) = (P & Q) + (P & R)",
    "P + (Q & R) = (P + Q) & (P + R)",
};

}  // namespace

std::string_view law_statement(int law) {
  if (law < 1 || law > kLawCount) throw std::out_of_range("no law " + std::to_string(law));
  return kStatements[static_cast<std::size_t>(law - 1)];
}

std::pair<Term, Term> law_instance(int law, const Term& p, const Term& q, const Term& r,
                                   const LabelSet& h) {
  const Term nil = Term::nil();
  switch (law) {
    case 1: return {Term::hide(nil, h), nil};
    case 2: return {Term::fuse(p, complement_term(p)), nil};
    case 3: return {Term::fuse(p, p), p};
    case 4: return {Term::fuse(p, nil), nil};
    case 5: return {Term::hide(Term::choice(p, q), h), Term::choice(Term::hide(p, h), Term::hide(q, h))};
    case 6: return {Term::hide(Term::fuse(p, q), h), Term::fuse(Term::hide(p, h), Term::hide(q, h))};
    case 7: return {Term::fuse(p, q), Term::fuse(q, p)};
    case 8: return {Term::fuse(p, Term::fuse(q, r)), Term::fuse(Term::fuse(p, q), r)};
    case 9: return {Term::choice(p, p), p};
    case 10: return {Term::choice(p, nil), p};
    case 11: return {Term::choice(p, q), Term::choice(q, p)};
    case 12: return {Term::choice(p, Term::choice(q, r)), Term::choice(Term::choice(p, q), r)};
    case 13: return {Term::fuse(p, Term::choice(q, r)), Term::choice(Term::fuse(p, q), Term::fuse(p, r))};
    case 14: return {Term::choice(p, Term::fuse(q, r)), Term::fuse(Term::choice(p, q), Term::choice(p, r))};
    default: throw std::out_of_range("no law " + std::to_string(law));
  }
}

std::string ConformanceReport::to_text() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "law " << row.law << ' ' << (row.verdict() ? "holds" : "fails") << ' ' << row.holds
        << '/' << row.total << '\n';
    for (const auto& cex : row.counterexamples)
      out << "cex " << format(cex.lhs) << " ;; " << format(cex.rhs) << '\n';
  }
  return out.str();
}

ConformanceReport law_conformance(const ConformanceParams& params, const Environment& env) {
  TermGenOptions opts;
  opts.max_depth = params.max_depth;
  if (!params.alphabet.empty()) {
    opts.alphabet = params.alphabet;
  } else if (!env.universe().empty()) {
    opts.alphabet.clear();
    for (const auto& l : env.universe()) opts.alphabet.push_back(l.name());
  }

  struct Sample {
    Term p, q, r;
    LabelSet hidden;
  };
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < params.samples; ++i) {
    TermGenerator gen(derive_seed(params.seed, i), opts);
    Sample s;
    s.p = gen.term();
    s.q = gen.term();
    s.r = gen.term();
    // A process in hiding position stands for its sort.
    s.hidden = sort(gen.term());
    samples.push_back(std::move(s));
  }

  ConformanceReport report;
  for (int law = 1; law <= kLawCount; ++law) {
    LawRow row;
    row.law = law;
    for (const auto& s : samples) {
      auto [lhs, rhs] = law_instance(law, s.p, s.q, s.r, s.hidden);
      auto verdict = bisimilar_terms(lhs, rhs, env, params.bounds);
      ++row.total;
      if (verdict.bisimilar) {
        ++row.holds;
      } else {
        row.counterexamples.push_back({lhs, rhs, false, verdict.approximate});
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace physarum
