#include <doctest.h>

#include "physarum/environment.hpp"
#include "physarum/error.hpp"
#include "physarum/generator.hpp"
#include "physarum/syntax.hpp"

using namespace physarum;

namespace {
Label L(const char* s) { return parse_label(s); }
Term P(const char* s) { return parse(s); }
}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("labels and complements") {
    CHECK(L("a") == Label::named("a"));
    CHECK(L("~a") == Label::inhibitor("a"));
    CHECK(L("tau").is_tau());
    CHECK(L("a").complement() == L("~a"));
    CHECK(L("a").complement().complement() == L("a"));
    CHECK(L("a").complements(L("~a")));
    CHECK_FALSE(L("a").complements(L("a")));
    CHECK_THROWS_AS(Label::tau().complement(), std::logic_error);
    CHECK(L("tau").name().empty());
    CHECK(L("a") < L("~a"));
    CHECK(L("~a") < L("b"));
    CHECK(L("b") < L("tau"));
  }

  TEST_CASE("parse builds the expected trees") {
    CHECK(P("a.0") == Term::prefix(L("a"), Term::nil()));
    CHECK(P("0") == Term::nil());
    Term a0 = P("a.0"), b0 = P("b.0"), c0 = P("c.0");
    CHECK(P("a.0 + b.0 & c.0") == Term::choice(a0, Term::fuse(b0, c0)));
    CHECK(P("a.0 & b.0 | c.0") == Term::fuse(a0, Term::coop(b0, c0)));
    CHECK(P("a.0 | b.0 \\ {b}") == Term::coop(a0, Term::hide(b0, {L("b")})));
    CHECK(P("a.0 + b.0 + c.0") == Term::choice(Term::choice(a0, b0), c0));
    CHECK(P("a.0 + (b.0 + c.0)") == Term::choice(a0, Term::choice(b0, c0)));
    CHECK(P("A(a).R(~b).C(c)") == Term::attract(L("a"), Term::repel(L("~b"), Term::diffuse(L("c")))));
    CHECK(P("tau.X") == Term::prefix(Label::tau(), Term::constant("X")));
    CHECK(P("C(tau)") == Term::diffuse(Label::tau()));
  }

  TEST_CASE("whitespace is insignificant") {
    CHECK(P("  a .  0 ") == P("a.0"));
    CHECK(P("a.0\n+\tb.0") == P("a.0 + b.0"));
  }

  TEST_CASE("a process in hiding position stands for its sort") {
    CHECK(P("X \\ (a.0 | ~b.c.0)") == Term::hide(Term::constant("X"), {L("a"), L("~b"), L("c")}));
    CHECK_THROWS_AS(P("a.0 \\ Y"), Error);
  }

  TEST_CASE("parse errors carry position and expectations") {
    try {
      P("a.\n  +");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
      CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("a.0 +"), ParseError);
    CHECK_THROWS_AS(P("(a.0"), ParseError);
    CHECK_THROWS_AS(P("a.0 b.0"), ParseError);
    CHECK_THROWS_AS(P("A(tau).0"), ParseError);
    CHECK_THROWS_AS(P("x \\ {tau}"), ParseError);
    CHECK_THROWS_AS(P("~tau.0"), ParseError);
  }

  TEST_CASE("format") {
    CHECK(format(Term::prefix(L("a"), Term::nil())) == "a.0");
    CHECK(format(Term::fuse(Term::nil(), Term::nil())) == "0 & 0");
    CHECK(format(Term::hide(Term::constant("X"), {L("a"), L("b")})) == "X \\ {a, b}");
    CHECK(format(P("a.(b.0 + c.0)")) == "a.(b.0 + c.0)");
    CHECK(format(P("(a.0 + b.0) & c.0")) == "(a.0 + b.0) & c.0");
    CHECK(format(P("a.0 + (b.0 + c.0)")) == "a.0 + (b.0 + c.0)");
    CHECK(format(P("(a.0 | b.0) \\ {a} \\ {b}")) == "(a.0 | b.0) \\ {a} \\ {b}");
    CHECK(format(P("0 \\ {}")) == "0 \\ {}");
  }

  TEST_CASE("complement_term") {
    CHECK(complement_term(P("a.0")) == P("~a.0"));
    CHECK(complement_term(P("a.0 | ~b.0")) == P("~a.0 | b.0"));
    CHECK(complement_term(P("tau.a.0 \\ {a}")) == P("tau.~a.0 \\ {a}"));
    CHECK(complement_term(P("A(a).C(~b)")) == P("A(~a).C(b)"));
    CHECK_THROWS_AS(complement_term(P("a.X")), UnresolvedConstant);
    CHECK_FALSE(try_complement(P("X")).has_value());
  }

  TEST_CASE("sort") {
    CHECK(sort(P("a.0 + b.0")) == LabelSet{L("a"), L("b")});
    CHECK(sort(P("0")).empty());
    CHECK(sort(P("tau.0")).empty());
    Environment env = load_scene("X := a.X\nY := b.X | Y\n");
    CHECK(sort(P("X"), env) == LabelSet{L("a")});
    CHECK(sort(P("Y"), env) == LabelSet{L("a"), L("b")});
    CHECK_THROWS_AS(sort(P("Z"), env), UnresolvedConstant);
    CHECK_THROWS_AS(sort(P("X")), UnresolvedConstant);
  }

  TEST_CASE("term files") {
    TermFile f = parse_term_file("# comment\nX := a.X  # trailing\n\nX | b.0\n");
    REQUIRE(f.definitions.size() == 1);
    CHECK(f.definitions[0].first == "X");
    CHECK(f.root == P("X | b.0"));
    CHECK(format_term_file(f) == "X := a.X\nX | b.0\n");
    CHECK_THROWS_AS(parse_term_file("X := a.0\n"), Error);
    CHECK_THROWS_AS(parse_term_file("a.0\nb.0\n"), Error);
  }

  TEST_CASE("round trip on random terms") {
    TermGenOptions opts;
    opts.max_depth = 8;
    opts.alphabet = {"a", "b", "c"};
    opts.allow_tau = true;
    opts.constants = {"X", "Y"};
    for (std::uint64_t i = 0; i < 10000; ++i) {
      Term t = TermGenerator(derive_seed(1, i), opts).term();
      REQUIRE_MESSAGE(parse(format(t)) == t, format(t));
    }
  }

  TEST_CASE("complement is an involution on constant-free terms") {
    TermGenOptions opts;
    opts.max_depth = 6;
    opts.allow_tau = true;
    for (std::uint64_t i = 0; i < 2000; ++i) {
      Term t = TermGenerator(derive_seed(2, i), opts).term();
      REQUIRE(complement_term(complement_term(t)) == t);
    }
  }

  TEST_CASE("sort stays inside the universe") {
    TermGenOptions opts;
    opts.alphabet = {"a", "b", "c"};
    LabelSet universe;
    for (const auto& n : opts.alphabet) {
      universe.insert(Label::named(n));
      universe.insert(Label::inhibitor(n));
    }
    for (std::uint64_t i = 0; i < 1000; ++i) {
      LabelSet s = sort(TermGenerator(derive_seed(3, i), opts).term());
      REQUIRE(std::includes(universe.begin(), universe.end(), s.begin(), s.end()));
    }
  }

  TEST_CASE("structural equality and measures") {
    Term t = P("a.(b.0 | X)");
    CHECK(t == P("a.(b.0 | X)"));
    CHECK(t != P("a.(X | b.0)"));
    CHECK(t.hash() == P("a.(b.0 | X)").hash());
    CHECK(t.size() == 5);
    CHECK(t.depth() == 3);
    CHECK(t.has_constants());
    CHECK_FALSE(P("a.0").has_constants());
  }
}
