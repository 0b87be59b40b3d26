#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "physarum/label.hpp"

namespace physarum {

enum class TermKind : std::uint8_t {
  Nil,
  Prefix,   // a.P
  Attract,  // A(a).P
  Repel,    // R(a).P
  Diffuse,  // C(a)
  Coop,     // P | Q
  Hide,     // P \ {a, ...}
  Fuse,     // P & Q
  Choice,   // P + Q
  Const,    // X
};

/// Immutable process term. Copies share structure; comparison is structural.
class Term {
 public:
  Term();  // Nil

  static Term nil();
  static Term prefix(Label action, Term body);
  static Term attract(Label arg, Term body);
  static Term repel(Label arg, Term body);
  static Term diffuse(Label arg);
  static Term coop(Term left, Term right);
  static Term hide(Term body, LabelSet hidden);
  static Term fuse(Term left, Term right);
  static Term choice(Term left, Term right);
  static Term constant(std::string name);

  TermKind kind() const;
  bool is_nil() const { return kind() == TermKind::Nil; }

  /// Action of Prefix, argument of Attract/Repel/Diffuse.
  const Label& label() const;
  /// Continuation of Prefix/Attract/Repel, body of Hide.
  const Term& body() const;
  const Term& left() const;
  const Term& right() const;
  const LabelSet& hidden() const;
  const std::string& name() const;

  std::size_t hash() const;
  std::size_t size() const;
  std::size_t depth() const;
  bool has_constants() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

  struct Node;  // defined in term.cpp

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

}  // namespace physarum
