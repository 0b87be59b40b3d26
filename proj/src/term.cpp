#include "physarum/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace physarum {

struct Term::Node {
  TermKind kind = TermKind::Nil;
  Label label = Label::tau();
  std::string name;
  LabelSet hidden;
  Term left{nullptr};
  Term right{nullptr};
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;
  bool has_constants = false;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t label_hash(const Label& l) {
  std::size_t h = std::hash<std::string>{}(l.to_string());
  return h;
}

}  // namespace

Term::Term() : Term(nil()) {}

Term Term::nil() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->hash = mix(0, static_cast<std::size_t>(TermKind::Nil));
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return Term(node);
}

namespace {

void finish(Term::Node& n) {
  std::size_t h = mix(0, static_cast<std::size_t>(n.kind));
  switch (n.kind) {
    case TermKind::Nil:
      break;
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
      h = mix(h, label_hash(n.label));
      h = mix(h, n.left.hash());
      n.size = 1 + n.left.size();
      n.depth = 1 + n.left.depth();
      n.has_constants = n.left.has_constants();
      break;
    case TermKind::Diffuse:
      h = mix(h, label_hash(n.label));
      break;
    case TermKind::Hide:
      for (const auto& l : n.hidden) h = mix(h, label_hash(l));
      h = mix(h, n.left.hash());
      n.size = 1 + n.left.size();
      n.depth = 1 + n.left.depth();
      n.has_constants = n.left.has_constants();
      break;
    case TermKind::Coop:
    case TermKind::Fuse:
    case TermKind::Choice:
      h = mix(h, n.left.hash());
      h = mix(h, n.right.hash());
      n.size = 1 + n.left.size() + n.right.size();
      n.depth = 1 + std::max(n.left.depth(), n.right.depth());
      n.has_constants = n.left.has_constants() || n.right.has_constants();
      break;
    case TermKind::Const:
      h = mix(h, std::hash<std::string>{}(n.name));
      n.has_constants = true;
      break;
  }
  n.hash = h;
}

}  // namespace

Term Term::prefix(Label action, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Prefix;
  n->label = std::move(action);
  n->left = std::move(body);
  finish(*n);
  return Term(std::move(n));
}

Term Term::attract(Label arg, Term body) {
  if (arg.is_tau()) throw std::invalid_argument("A(...) takes a named label");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Attract;
  n->label = std::move(arg);
  n->left = std::move(body);
  finish(*n);
  return Term(std::move(n));
}

Term Term::repel(Label arg, Term body) {
  if (arg.is_tau()) throw std::invalid_argument("R(...) takes a named label");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Repel;
  n->label = std::move(arg);
  n->left = std::move(body);
  finish(*n);
  return Term(std::move(n));
}

Term Term::diffuse(Label arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Diffuse;
  n->label = std::move(arg);
  finish(*n);
  return Term(std::move(n));
}

Term Term::hide(Term body, LabelSet hidden) {
  for (const auto& l : hidden)
    if (l.is_tau()) throw std::invalid_argument("tau cannot be hidden");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Hide;
  n->left = std::move(body);
  n->hidden = std::move(hidden);
  finish(*n);
  return Term(std::move(n));
}

namespace {

std::shared_ptr<Term::Node> binary(TermKind kind, Term left, Term right) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->left = std::move(left);
  n->right = std::move(right);
  finish(*n);
  return n;
}

}  // namespace

Term Term::coop(Term left, Term right) {
  return Term(binary(TermKind::Coop, std::move(left), std::move(right)));
}

Term Term::fuse(Term left, Term right) {
  return Term(binary(TermKind::Fuse, std::move(left), std::move(right)));
}

Term Term::choice(Term left, Term right) {
  return Term(binary(TermKind::Choice, std::move(left), std::move(right)));
}

Term Term::constant(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty constant name");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Const;
  n->name = std::move(name);
  finish(*n);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }

const Label& Term::label() const {
  switch (node_->kind) {
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
    case TermKind::Diffuse:
      return node_->label;
    default:
      throw std::logic_error("term has no label");
  }
}

const Term& Term::body() const {
  switch (node_->kind) {
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
    case TermKind::Hide:
      return node_->left;
    default:
      throw std::logic_error("term has no body");
  }
}

const Term& Term::left() const {
  if (node_->kind != TermKind::Coop && node_->kind != TermKind::Fuse &&
      node_->kind != TermKind::Choice)
    throw std::logic_error("term is not binary");
  return node_->left;
}

const Term& Term::right() const {
  if (node_->kind != TermKind::Coop && node_->kind != TermKind::Fuse &&
      node_->kind != TermKind::Choice)
    throw std::logic_error("term is not binary");
  return node_->right;
}

const LabelSet& Term::hidden() const {
  if (node_->kind != TermKind::Hide) throw std::logic_error("term is not a hiding");
  return node_->hidden;
}

const std::string& Term::name() const {
  if (node_->kind != TermKind::Const) throw std::logic_error("term is not a constant");
  return node_->name;
}

std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_ ? node_->size : 0; }
std::size_t Term::depth() const { return node_->depth; }
bool Term::has_constants() const { return node_->has_constants; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case TermKind::Nil:
      return std::strong_ordering::equal;
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
      if (auto c = x.label <=> y.label; c != 0) return c;
      return x.left <=> y.left;
    case TermKind::Diffuse:
      return x.label <=> y.label;
    case TermKind::Hide:
      if (auto c = x.left <=> y.left; c != 0) return c;
      return std::lexicographical_compare_three_way(x.hidden.begin(), x.hidden.end(),
                                                    y.hidden.begin(), y.hidden.end());
    case TermKind::Coop:
    case TermKind::Fuse:
    case TermKind::Choice:
      if (auto c = x.left <=> y.left; c != 0) return c;
      return x.right <=> y.right;
    case TermKind::Const:
      return x.name <=> y.name;
  }
  return std::strong_ordering::equal;
}

}  // namespace physarum
