#include "physarum/normalize.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "physarum/syntax.hpp"

namespace physarum {

namespace {

using Monomial = std::vector<Term>;  // sorted, duplicate-free atoms
using Sum = std::vector<Monomial>;   // empty sum is Nil

void flatten(const Term& t, TermKind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    flatten(t.left(), kind, out);
    flatten(t.right(), kind, out);
  } else {
    out.push_back(t);
  }
}

Monomial to_monomial(const Term& t) {
  Monomial m;
  flatten(t, TermKind::Fuse, m);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

/// Reads back a term already in normal form (up to ordering).
Sum to_sum(const Term& t) {
  if (t.is_nil()) return {};
  std::vector<Term> summands;
  flatten(t, TermKind::Choice, summands);
  Sum s;
  for (const auto& x : summands) s.push_back(to_monomial(x));
  return s;
}

Term build_monomial(const Monomial& m) {
  Term t = m.front();
  for (std::size_t i = 1; i < m.size(); ++i) t = Term::fuse(t, m[i]);
  return t;
}

void absorb(Sum& s) {
  for (auto& m : s) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  std::sort(s.begin(), s.end(), [](const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Sum kept;
  for (auto& m : s) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) {
      return std::includes(m.begin(), m.end(), k.begin(), k.end());
    });
    if (!absorbed) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  s = std::move(kept);
}

Term build_sum(Sum s) {
  absorb(s);
  if (s.empty()) return Term::nil();
  Term t = build_monomial(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) t = Term::choice(t, build_monomial(s[i]));
  return t;
}

/// Re-sorts the sums and monomials of a normal form whose labels were renamed.
Term resort(const Term& t) {
  switch (t.kind()) {
    case TermKind::Prefix:
      return Term::prefix(t.label(), resort(t.body()));
    case TermKind::Attract:
      return Term::attract(t.label(), resort(t.body()));
    case TermKind::Repel:
      return Term::repel(t.label(), resort(t.body()));
    case TermKind::Coop:
      return Term::coop(resort(t.left()), resort(t.right()));
    case TermKind::Hide:
      return Term::hide(resort(t.body()), t.hidden());
    case TermKind::Fuse:
    case TermKind::Choice: {
      Sum s = to_sum(t);
      for (auto& m : s)
        for (auto& a : m) a = resort(a);
      return build_sum(std::move(s));
    }
    default:
      return t;
  }
}

class Normalizer {
 public:
  Term run(const Term& t) {
    switch (t.kind()) {
      case TermKind::Nil:
      case TermKind::Const:
        return t;
      case TermKind::Diffuse:
        return collapse_label_free(t);
      case TermKind::Prefix:
        return collapse_label_free(Term::prefix(t.label(), run(t.body())));
      case TermKind::Attract:
        return collapse_label_free(Term::attract(t.label(), run(t.body())));
      case TermKind::Repel:
        return collapse_label_free(Term::repel(t.label(), run(t.body())));
      case TermKind::Coop:
        return collapse_label_free(Term::coop(run(t.left()), run(t.right())));
      case TermKind::Hide:
        return collapse_label_free(push_hiding(run(t.body()), t.hidden()));
      case TermKind::Choice: {
        std::vector<Term> summands;
        flatten(t, TermKind::Choice, summands);
        Sum s;
        for (const auto& x : summands)
          for (auto& m : to_sum(run(x))) s.push_back(std::move(m));
        return collapse_label_free(build_sum(std::move(s)));
      }
      case TermKind::Fuse: {
        std::vector<Term> operands;
        flatten(t, TermKind::Fuse, operands);
        return collapse_label_free(fuse(operands));
      }
    }
    return t;
  }

 private:
  /// Complement of a normal form, re-sorted; nullopt when it has constants.
  const std::optional<Term>& complement_of(const Term& nf) {
    auto it = complements_.find(nf);
    if (it != complements_.end()) return it->second;
    std::optional<Term> c;
    if (!nf.has_constants()) c = resort(complement_term(nf));
    return complements_.emplace(nf, std::move(c)).first->second;
  }

  bool complementary(const Term& a, const Term& b) {
    const auto& c = complement_of(a);
    return c && *c == b;
  }

  Term collapse_label_free(const Term& nf) {
    if (nf.is_nil()) return nf;
    // Unchanged by complement without re-sorting means no named action occurs.
    return !nf.has_constants() && complement_term(nf) == nf ? Term::nil() : nf;
  }

  Term push_hiding(const Term& nf, const LabelSet& hidden) {
    Sum s = to_sum(nf);
    for (auto& m : s)
      for (auto& atom : m) atom = Term::hide(atom, hidden);
    return build_sum(std::move(s));
  }

  bool has_complementary_atoms(const Monomial& m) {
    for (const auto& a : m) {
      const auto& c = complement_of(a);
      if (c && std::binary_search(m.begin(), m.end(), *c)) return true;
    }
    return false;
  }

  Term fuse(const std::vector<Term>& raw) {
    std::vector<Term> operands;
    for (const auto& x : raw) {
      Term nf = run(x);
      if (nf.is_nil()) return nf;
      if (nf.kind() == TermKind::Fuse)
        flatten(nf, TermKind::Fuse, operands);
      else
        operands.push_back(std::move(nf));
    }
    std::sort(operands.begin(), operands.end());
    operands.erase(std::unique(operands.begin(), operands.end()), operands.end());
    for (std::size_t i = 0; i < operands.size(); ++i)
      for (std::size_t j = i + 1; j < operands.size(); ++j)
        if (complementary(operands[i], operands[j])) return Term::nil();

    Sum product{Monomial{}};
    for (const auto& op : operands) {
      Sum next;
      for (const auto& left : product) {
        for (const auto& right : to_sum(op)) {
          Monomial m = left;
          m.insert(m.end(), right.begin(), right.end());
          std::sort(m.begin(), m.end());
          m.erase(std::unique(m.begin(), m.end()), m.end());
          if (!has_complementary_atoms(m)) next.push_back(std::move(m));
        }
      }
      absorb(next);
      product = std::move(next);
      if (product.empty()) return Term::nil();
    }
    return build_sum(std::move(product));
  }

  std::unordered_map<Term, std::optional<Term>, TermHash> complements_;
};

}  // namespace

Term normalize(const Term& term) { return Normalizer().run(term); }

bool axiom_equal(const Term& a, const Term& b) { return normalize(a) == normalize(b); }

}  // namespace physarum
