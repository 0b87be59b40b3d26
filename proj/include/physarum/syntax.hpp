#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "physarum/error.hpp"
#include "physarum/label.hpp"
#include "physarum/term.hpp"

namespace physarum {

class Environment;

// Concrete grammar, loosest binding first:
//
//   choice := fuse ('+' fuse)*
//   fuse   := coop ('&' coop)*
//   coop   := hide ('|' hide)*
//   hide   := prefix ('\' (labelset | prefix))*
//   prefix := label '.' prefix | 'A(' label ').' prefix | 'R(' label ').' prefix | atom
//   atom   := '0' | 'C(' label ')' | CONST | '(' choice ')'
//   label  := name | '~' name | 'tau'
//
// Names start lowercase, constants uppercase. A process in hiding position
// stands for its sort and must be constant-free.

Term parse(std::string_view text);
Label parse_label(std::string_view text);

/// Canonical text with minimal parentheses; parse(format(t)) == t.
std::string format(const Term& term);

/// Flips the polarity of every label; tau and hidden sets are left alone.
/// Throws UnresolvedConstant on a Const node.
Term complement_term(const Term& term);
std::optional<Term> try_complement(const Term& term);

/// Named labels occurring in the term, unfolding each constant name once.
LabelSet sort(const Term& term, const Environment& env);
/// Constant-free variant; throws UnresolvedConstant on a Const node.
LabelSet sort(const Term& term);

/// Contents of a `.phy` file: `NAME := term` definitions followed by one root term.
struct TermFile {
  std::vector<std::pair<std::string, Term>> definitions;
  Term root;
};

TermFile parse_term_file(std::string_view text);
std::string format_term_file(const TermFile& file);

}  // namespace physarum
