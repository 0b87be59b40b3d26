#include "physarum/syntax.hpp"

#include <cctype>
#include <set>

#include "physarum/environment.hpp"

namespace physarum {

namespace {

enum class Tok {
  LowerIdent,
  UpperIdent,
  Tau,
  Zero,
  Dot,
  Tilde,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Backslash,
  Bar,
  Amp,
  Plus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t col = 1;
  std::size_t i = 0;
  auto single = [&](Tok k) {
    out.push_back({k, std::string(1, text[i]), line, col});
    ++i;
    ++col;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      Tok k = std::isupper(static_cast<unsigned char>(c)) ? Tok::UpperIdent
              : word == "tau"                              ? Tok::Tau
                                                           : Tok::LowerIdent;
      out.push_back({k, word, line, col});
      col += j - i;
      i = j;
      continue;
    }
    switch (c) {
      case '0':
        if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))
          throw ParseError(line, col, {"'0'"}, std::string(text.substr(i, 2)));
        single(Tok::Zero);
        break;
      case '.': single(Tok::Dot); break;
      case '~': single(Tok::Tilde); break;
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case '{': single(Tok::LBrace); break;
      case '}': single(Tok::RBrace); break;
      case ',': single(Tok::Comma); break;
      case '\\': single(Tok::Backslash); break;
      case '|': single(Tok::Bar); break;
      case '&': single(Tok::Amp); break;
      case '+': single(Tok::Plus); break;
      default:
        throw ParseError(line, col, {"term"}, std::string(1, c));
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Term parse_all() {
    Term t = choice();
    expect(Tok::End, "end of input");
    return t;
  }

  Label parse_label_only() {
    Label l = label();
    expect(Tok::End, "end of input");
    return l;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail({what});
  }

  Term choice() {
    Term t = fuse();
    while (accept(Tok::Plus)) t = Term::choice(t, fuse());
    return t;
  }

  Term fuse() {
    Term t = coop();
    while (accept(Tok::Amp)) t = Term::fuse(t, coop());
    return t;
  }

  Term coop() {
    Term t = hide();
    while (accept(Tok::Bar)) t = Term::coop(t, hide());
    return t;
  }

  Term hide() {
    Term t = prefix();
    while (accept(Tok::Backslash)) {
      if (peek().kind == Tok::LBrace) {
        t = Term::hide(t, label_set());
        continue;
      }
      const Token& at = peek();
      Term q = prefix();
      if (q.has_constants())
        throw ParseError(at.line, at.column, {"label set", "constant-free process"},
                         "process with constants");
      t = Term::hide(t, sort(q));
    }
    return t;
  }

  LabelSet label_set() {
    expect(Tok::LBrace, "'{'");
    LabelSet out;
    if (accept(Tok::RBrace)) return out;
    do {
      if (peek().kind == Tok::Tau) fail({"named label"});
      out.insert(label());
    } while (accept(Tok::Comma));
    expect(Tok::RBrace, "'}'");
    return out;
  }

  bool at_label() const {
    Tok k = peek().kind;
    return k == Tok::LowerIdent || k == Tok::Tilde || k == Tok::Tau;
  }

  Label label() {
    if (accept(Tok::Tau)) return Label::tau();
    bool inhibitor = accept(Tok::Tilde);
    if (peek().kind != Tok::LowerIdent) fail({"label name"});
    std::string name = peek().text;
    ++pos_;
    return Label::named(std::move(name), inhibitor ? Polarity::Inhibitor : Polarity::Activator);
  }

  Label named_label() {
    if (peek().kind == Tok::Tau) fail({"named label"});
    return label();
  }

  bool at_keyword(const char* word) const {
    return peek().kind == Tok::UpperIdent && peek().text == word && peek(1).kind == Tok::LParen;
  }

  Term prefix() {
    if (at_label()) {
      Label l = label();
      expect(Tok::Dot, "'.'");
      return Term::prefix(std::move(l), prefix());
    }
    if (at_keyword("A") || at_keyword("R")) {
      bool attract = peek().text == "A";
      pos_ += 2;
      Label l = named_label();
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      Term body = prefix();
      return attract ? Term::attract(std::move(l), std::move(body))
                     : Term::repel(std::move(l), std::move(body));
    }
    return atom();
  }

  Term atom() {
    if (accept(Tok::Zero)) return Term::nil();
    if (at_keyword("C")) {
      pos_ += 2;
      Label l = label();
      expect(Tok::RParen, "')'");
      return Term::diffuse(std::move(l));
    }
    if (peek().kind == Tok::UpperIdent) {
      std::string name = peek().text;
      ++pos_;
      return Term::constant(std::move(name));
    }
    if (accept(Tok::LParen)) {
      Term t = choice();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail({"'0'", "label", "constant", "'A('", "'R('", "'C('", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Term& t) {
  switch (t.kind()) {
    case TermKind::Choice: return 1;
    case TermKind::Fuse: return 2;
    case TermKind::Coop: return 3;
    case TermKind::Hide: return 4;
    default: return 5;
  }
}

void emit(const Term& t, std::string& out);

void emit_at(const Term& t, int min_prec, std::string& out) {
  if (precedence(t) < min_prec) {
    out += '(';
    emit(t, out);
    out += ')';
  } else {
    emit(t, out);
  }
}

void emit(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Nil:
      out += '0';
      break;
    case TermKind::Prefix:
      out += t.label().to_string();
      out += '.';
      emit_at(t.body(), 5, out);
      break;
    case TermKind::Attract:
    case TermKind::Repel:
      out += t.kind() == TermKind::Attract ? "A(" : "R(";
      out += t.label().to_string();
      out += ").";
      emit_at(t.body(), 5, out);
      break;
    case TermKind::Diffuse:
      out += "C(" + t.label().to_string() + ")";
      break;
    case TermKind::Hide:
      emit_at(t.body(), 4, out);
      out += " \\ ";
      out += to_string(t.hidden());
      break;
    case TermKind::Coop:
    case TermKind::Fuse:
    case TermKind::Choice: {
      int p = precedence(t);
      emit_at(t.left(), p, out);
      out += t.kind() == TermKind::Coop ? " | " : t.kind() == TermKind::Fuse ? " & " : " + ";
      emit_at(t.right(), p + 1, out);
      break;
    }
    case TermKind::Const:
      out += t.name();
      break;
  }
}

void collect_sort(const Term& t, const Environment* env, std::set<std::string>& unfolded,
                  LabelSet& out) {
  switch (t.kind()) {
    case TermKind::Nil:
      return;
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel:
      if (t.label().is_named()) out.insert(t.label());
      collect_sort(t.body(), env, unfolded, out);
      return;
    case TermKind::Diffuse:
      if (t.label().is_named()) out.insert(t.label());
      return;
    case TermKind::Hide:
      out.insert(t.hidden().begin(), t.hidden().end());
      collect_sort(t.body(), env, unfolded, out);
      return;
    case TermKind::Coop:
    case TermKind::Fuse:
    case TermKind::Choice:
      collect_sort(t.left(), env, unfolded, out);
      collect_sort(t.right(), env, unfolded, out);
      return;
    case TermKind::Const:
      if (env == nullptr) throw UnresolvedConstant(t.name());
      if (!unfolded.insert(t.name()).second) return;
      collect_sort(env->resolve_constant(t.name()), env, unfolded, out);
      return;
  }
}

}  // namespace

Term parse(std::string_view text) { return Parser(lex(text, 1)).parse_all(); }

Label parse_label(std::string_view text) { return Parser(lex(text, 1)).parse_label_only(); }

std::string format(const Term& term) {
  std::string out;
  emit(term, out);
  return out;
}

Term complement_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Nil:
      return t;
    case TermKind::Prefix:
    case TermKind::Attract:
    case TermKind::Repel: {
      Label l = t.label().is_tau() ? t.label() : t.label().complement();
      Term body = complement_term(t.body());
      if (t.kind() == TermKind::Prefix) return Term::prefix(std::move(l), std::move(body));
      if (t.kind() == TermKind::Attract) return Term::attract(std::move(l), std::move(body));
      return Term::repel(std::move(l), std::move(body));
    }
    case TermKind::Diffuse:
      return t.label().is_tau() ? t : Term::diffuse(t.label().complement());
    case TermKind::Hide:
      return Term::hide(complement_term(t.body()), t.hidden());
    case TermKind::Coop:
      return Term::coop(complement_term(t.left()), complement_term(t.right()));
    case TermKind::Fuse:
      return Term::fuse(complement_term(t.left()), complement_term(t.right()));
    case TermKind::Choice:
      return Term::choice(complement_term(t.left()), complement_term(t.right()));
    case TermKind::Const:
      throw UnresolvedConstant(t.name());
  }
  return t;
}

std::optional<Term> try_complement(const Term& term) {
  if (term.has_constants()) return std::nullopt;
  return complement_term(term);
}

LabelSet sort(const Term& term, const Environment& env) {
  LabelSet out;
  std::set<std::string> unfolded;
  collect_sort(term, &env, unfolded, out);
  return out;
}

LabelSet sort(const Term& term) {
  LabelSet out;
  std::set<std::string> unfolded;
  collect_sort(term, nullptr, unfolded, out);
  return out;
}

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Term parse_at(std::string_view text, std::size_t line) {
  return Parser(lex(text, line)).parse_all();
}

}  // namespace

TermFile parse_term_file(std::string_view text) {
  TermFile file;
  bool have_root = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (is_blank(line)) continue;
    if (have_root) throw ParseError(line_no, 1, {"end of file"}, "second root term");
    auto def = line.find(":=");
    if (def != std::string_view::npos) {
      std::string name = trim(line.substr(0, def));
      if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
        throw ParseError(line_no, 1, {"constant name"}, "'" + name + "'");
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError(line_no, 1, {"constant name"}, "'" + name + "'");
      file.definitions.emplace_back(name, parse_at(line.substr(def + 2), line_no));
    } else {
      file.root = parse_at(line, line_no);
      have_root = true;
    }
  }
  if (!have_root) throw ParseError(line_no == 0 ? 1 : line_no, 1, {"root term"}, "end of file");
  return file;
}

std::string format_term_file(const TermFile& file) {
  std::string out;
  for (const auto& [name, body] : file.definitions) out += name + " := " + format(body) + "\n";
  out += format(file.root) + "\n";
  return out;
}

}  // namespace physarum
