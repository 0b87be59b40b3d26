#include "physarum/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>

#include "physarum/error.hpp"

namespace physarum {

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Var, std::move(name), nullptr, nullptr}));
}
Formula Formula::top() {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Top, {}, nullptr, nullptr}));
}
Formula Formula::bottom() {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Bottom, {}, nullptr, nullptr}));
}
Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(
      Node{FormulaKind::Not, {}, std::make_shared<const Formula>(std::move(f)), nullptr}));
}

namespace {

template <FormulaKind K, typename NodeT>
std::shared_ptr<NodeT> binary_node(Formula a, Formula b) {
  return std::make_shared<NodeT>(NodeT{K, {}, std::make_shared<const Formula>(std::move(a)),
                                       std::make_shared<const Formula>(std::move(b))});
}

}  // namespace

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(binary_node<FormulaKind::Or, Node>(std::move(a), std::move(b)));
}
Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(binary_node<FormulaKind::And, Node>(std::move(a), std::move(b)));
}
Formula Formula::implication(Formula a, Formula b) {
  return Formula(binary_node<FormulaKind::Implies, Node>(std::move(a), std::move(b)));
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  switch (kind()) {
    case FormulaKind::Var:
      out.insert(name());
      break;
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      break;
    case FormulaKind::Not:
      out = operand().variables();
      break;
    default: {
      out = left().variables();
      auto r = right().variables();
      out.insert(r.begin(), r.end());
    }
  }
  return out;
}

std::size_t Formula::depth() const {
  switch (kind()) {
    case FormulaKind::Var:
    case FormulaKind::Top:
    case FormulaKind::Bottom:
      return 0;
    case FormulaKind::Not:
      return 1 + operand().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip();
    if (pos_ != text_.size()) fail({"end of input"});
    return f;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(1, pos_ + 1, std::move(expected), found);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept("!")) return Formula::negation(unary());
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail({"')'"});
      return f;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail({"'T'", "'F'", "'!'", "'('", "variable"});
    std::string word(text_.substr(start, pos_ - start));
    if (word == "T") return Formula::top();
    if (word == "F") return Formula::bottom();
    if (std::isdigit(static_cast<unsigned char>(word[0]))) {
      pos_ = start;
      fail({"variable"});
    }
    return Formula::var(std::move(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

void emit(const Formula& f, std::string& out);

void emit_at(const Formula& f, int min, std::string& out) {
  if (precedence(f) < min) {
    out += '(';
    emit(f, out);
    out += ')';
  } else {
    emit(f, out);
  }
}

void emit(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Var: out += f.name(); break;
    case FormulaKind::Top: out += 'T'; break;
    case FormulaKind::Bottom: out += 'F'; break;
    case FormulaKind::Not:
      out += '!';
      emit_at(f.operand(), 4, out);
      break;
    case FormulaKind::Implies:
      emit_at(f.left(), 2, out);
      out += " -> ";
      emit_at(f.right(), 1, out);
      break;
    case FormulaKind::Or:
    case FormulaKind::And: {
      int p = precedence(f);
      emit_at(f.left(), p, out);
      out += f.kind() == FormulaKind::Or ? " | " : " & ";
      emit_at(f.right(), p + 1, out);
      break;
    }
  }
}

RationalStream map_truth(const RationalStream& s, bool (*op)(bool)) {
  auto apply = [&](const std::vector<Element>& in) {
    std::vector<Element> out;
    out.reserve(in.size());
    for (const auto& e : in) out.emplace_back(op(std::get<bool>(e)));
    return out;
  };
  if (s.is_finite()) return RationalStream::finite(ElementKind::Truth, apply(s.prefix()));
  return RationalStream::lasso(ElementKind::Truth, apply(s.prefix()), apply(s.cycle()));
}

RationalStream zip_truth(const RationalStream& a, const RationalStream& b, bool (*op)(bool, bool)) {
  auto at = [&](std::size_t i) {
    return Element(op(std::get<bool>(a.nth(i)), std::get<bool>(b.nth(i))));
  };
  auto la = a.length();
  auto lb = b.length();
  if (la || lb) {
    std::size_t n = std::min(la.value_or(SIZE_MAX), lb.value_or(SIZE_MAX));
    std::vector<Element> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return RationalStream::finite(ElementKind::Truth, std::move(out));
  }
  // Both infinite: after max(prefix) elements the pair is periodic with lcm(cycles).
  std::size_t p = std::max(a.prefix().size(), b.prefix().size());
  std::size_t c = std::lcm(a.cycle().size(), b.cycle().size());
  std::vector<Element> prefix;
  std::vector<Element> cycle;
  for (std::size_t i = 0; i < p; ++i) prefix.push_back(at(i));
  for (std::size_t i = 0; i < c; ++i) cycle.push_back(at(p + i));
  return RationalStream::lasso(ElementKind::Truth, std::move(prefix), std::move(cycle));
}

RationalStream valuate(const std::string& prop, const RationalStream& states, const Valuation& val) {
  if (states.kind() != ElementKind::State)
    throw KindMismatch("variable '" + prop + "' must denote a state stream");
  auto map = [&](const std::vector<Element>& in) {
    std::vector<Element> out;
    for (const auto& e : in) {
      StateId id = std::get<StateRef>(e).id;
      auto it = val.find({prop, id});
      if (it == val.end())
        throw PartialValuation("no value for proposition '" + prop + "' at state " +
                               std::to_string(id));
      out.emplace_back(it->second);
    }
    return out;
  };
  if (states.is_finite()) return RationalStream::finite(ElementKind::Truth, map(states.prefix()));
  return RationalStream::lasso(ElementKind::Truth, map(states.prefix()), map(states.cycle()));
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string format(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

RationalStream eval_formula(const Formula& f, const StreamEnv& env, const Valuation& val) {
  switch (f.kind()) {
    case FormulaKind::Var: {
      auto it = env.find(f.name());
      if (it == env.end()) throw UnboundVariable(f.name());
      return valuate(f.name(), it->second, val);
    }
    case FormulaKind::Top:
      return RationalStream::constant(true);
    case FormulaKind::Bottom:
      return RationalStream::constant(false);
    case FormulaKind::Not:
      return map_truth(eval_formula(f.operand(), env, val), [](bool x) { return !x; });
    case FormulaKind::Or:
      return zip_truth(eval_formula(f.left(), env, val), eval_formula(f.right(), env, val),
                       [](bool x, bool y) { return x || y; });
    case FormulaKind::And:
      return zip_truth(eval_formula(f.left(), env, val), eval_formula(f.right(), env, val),
                       [](bool x, bool y) { return x && y; });
    case FormulaKind::Implies:
      return zip_truth(eval_formula(f.left(), env, val), eval_formula(f.right(), env, val),
                       [](bool x, bool y) { return !x || y; });
  }
  throw std::logic_error("unreachable");
}

}  // namespace physarum
