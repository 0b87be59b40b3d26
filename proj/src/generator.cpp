#include "physarum/generator.hpp"

#include <stdexcept>

namespace physarum {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

TermGenerator::TermGenerator(std::uint64_t seed, TermGenOptions options)
    : rng_(seed), options_(std::move(options)) {
  if (options_.alphabet.empty()) throw std::invalid_argument("empty alphabet");
}

Label TermGenerator::named_label() {
  const auto& name = options_.alphabet[below(options_.alphabet.size())];
  return Label::named(name, below(2) == 0 ? Polarity::Activator : Polarity::Inhibitor);
}

Label TermGenerator::label() {
  if (options_.allow_tau && below(2 * options_.alphabet.size() + 1) == 0) return Label::tau();
  return named_label();
}

LabelSet TermGenerator::label_set() {
  LabelSet out;
  for (const auto& name : options_.alphabet) {
    if (below(3) == 0) out.insert(Label::named(name));
    if (below(4) == 0) out.insert(Label::inhibitor(name));
  }
  return out;
}

Term TermGenerator::leaf() {
  std::size_t options = options_.constants.empty() ? 2 : 3;
  switch (below(options)) {
    case 0: return Term::nil();
    case 1: return Term::diffuse(label());
    default: return Term::constant(options_.constants[below(options_.constants.size())]);
  }
}

Term TermGenerator::term() { return term(options_.max_depth); }

Term TermGenerator::term(std::size_t depth) {
  if (depth == 0) return leaf();
  // Weights: leaf 2, prefix 3, attract 1, repel 1, coop 1, hide 1, fuse 2, choice 2.
  std::size_t pick = below(13);
  if (pick < 2) return leaf();
  if (pick < 7) {
    Label l = pick < 5 ? label() : named_label();
    Term body = term(depth - 1);
    if (pick < 5) return Term::prefix(std::move(l), std::move(body));
    if (pick < 6) return Term::attract(std::move(l), std::move(body));
    return Term::repel(std::move(l), std::move(body));
  }
  if (pick == 8) {
    Term body = term(depth - 1);
    return Term::hide(std::move(body), label_set());
  }
  // Draw order is fixed so output is the same on every compiler.
  Term left = term(depth - 1);
  Term right = term(depth - 1);
  if (pick < 8) return Term::coop(std::move(left), std::move(right));
  if (pick < 11) return Term::fuse(std::move(left), std::move(right));
  return Term::choice(std::move(left), std::move(right));
}

}  // namespace physarum
