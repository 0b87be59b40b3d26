#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "physarum/label.hpp"
#include "physarum/term.hpp"

namespace physarum {

struct TermGenOptions {
  std::size_t max_depth = 4;
  std::vector<std::string> alphabet = {"a", "b"};
  bool allow_tau = false;
  /// Names usable as Const leaves; none by default.
  std::vector<std::string> constants;
};

/// Seeded random terms over every constructor. Output depends only on the
/// seed and options.
class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, TermGenOptions options);

  Term term();
  Term term(std::size_t depth);
  Label label();
  Label named_label();
  LabelSet label_set();

  std::uint64_t next() { return rng_(); }
  /// Uniform-ish in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  Term leaf();

  std::mt19937_64 rng_;
  TermGenOptions options_;
};

/// Mixes several integers into one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace physarum
