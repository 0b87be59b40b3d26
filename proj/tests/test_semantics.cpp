#include <doctest.h>

#include <set>
#include <tuple>

#include "physarum/environment.hpp"
#include "physarum/error.hpp"
#include "physarum/generator.hpp"
#include "physarum/lts.hpp"
#include "physarum/semantics.hpp"
#include "physarum/syntax.hpp"

using namespace physarum;

namespace {

using Triple = std::tuple<std::string, std::string, std::string>;

std::set<Triple> moves(const std::string& text, const Environment& env = {}) {
  std::set<Triple> out;
  for (const auto& t : derive_transitions(parse(text), env))
    out.emplace(t.action.to_string(), format(t.target), std::string(rule_name(t.rule)));
  return out;
}

std::set<std::pair<std::string, std::string>> pairs(const std::string& text, const Environment& env = {}) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, t, r] : moves(text, env)) out.emplace(a, t);
  return out;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("rule names round trip") {
    for (std::size_t i = 0; i < kRuleCount; ++i) {
      Rule r = static_cast<Rule>(i);
      CHECK(rule_from_name(rule_name(r)) == r);
    }
  }

  TEST_CASE("prefix and inaction") {
    CHECK(moves("a.0") == std::set<Triple>{{"a", "0", "Prefix"}});
    CHECK(moves("0").empty());
  }

  TEST_CASE("cooperation synchronizes complements on tau") {
    CHECK(pairs("a.0 | ~a.0") ==
          std::set<std::pair<std::string, std::string>>{{"a", "0 | ~a.0"}, {"~a", "a.0 | 0"}, {"tau", "0 | 0"}});
    CHECK(pairs("a.0 | a.0").size() == 2);
  }

  TEST_CASE("fusion of complementary processes") {
    CHECK(moves("a.b.0 & ~b.0").count({"a", "0", "FuseAnnihilate"}));
  }

  TEST_CASE("fusion without a common move only spreads") {
    CHECK(moves("a.c.0 & b.c.0") ==
          std::set<Triple>{{"a", "0 + C(a) + c.0", "FuseSpreadL"}, {"b", "0 + C(b) + c.0", "FuseSpreadR"}});
  }

  TEST_CASE("hiding") {
    CHECK(moves("(a.0 + b.0) \\ {b}") == std::set<Triple>{{"a", "0 \\ {b}", "Hiding"}});
    CHECK(pairs("(a.0 | ~a.0) \\ {a, ~a}") == std::set<std::pair<std::string, std::string>>{{"tau", "(0 | 0) \\ {a, ~a}"}});
  }

  TEST_CASE("attractants, repellents and diffusion") {
    Environment env = load_scene("A: a -> b\nR: a -> ~c\nC: d := e.0\n");
    CHECK(moves("A(a).0", env) == std::set<Triple>{{"b", "0", "PrefixA"}});
    CHECK(moves("R(a).0", env) == std::set<Triple>{{"~c", "0", "PrefixR"}});
    CHECK(moves("A(b).0", env).empty());
    CHECK(moves("C(d)", env) == std::set<Triple>{{"e", "0", "Diffusion"}});
    CHECK(moves("C(a)", env).empty());
  }

  TEST_CASE("constants and unfolding budget") {
    Environment env = load_scene("X := a.X\nY := Y\nZ := Z + b.0\nC: d := C(d)\n");
    CHECK(moves("X", env) == std::set<Triple>{{"a", "X", "Constant"}});
    CHECK_THROWS_AS(derive_transitions(parse("Y"), env), DepthExceeded);
    CHECK_THROWS_AS(derive_transitions(parse("Z"), env), DepthExceeded);
    // Self-reference through a diffusion binding contributes nothing.
    CHECK(derive_transitions(parse("C(d)"), env).empty());
    Environment spread = load_scene("C: a := 0 + C(a) + c.0\nC: b := C(a) + b.0\n");
    CHECK(moves("C(a)", spread) == std::set<Triple>{{"c", "0", "Diffusion"}});
    CHECK(pairs("C(b)", spread) == std::set<std::pair<std::string, std::string>>{{"b", "0"}, {"c", "0"}});
    CHECK_THROWS_AS(derive_transitions(parse("W"), env), UnresolvedConstant);
    Environment deep = load_scene("X0 := X1\nX1 := X2\nX2 := a.0\n");
    CHECK(derive_transitions(parse("X0"), deep, 3).size() == 1);
    CHECK_THROWS_AS(derive_transitions(parse("X0"), deep, 2), DepthExceeded);
  }

  TEST_CASE("every derived transition replays under its rule") {
    TermGenOptions opts;
    opts.max_depth = 5;
    opts.allow_tau = true;
    opts.constants = {"X"};
    Environment env = load_scene("A: a -> b\nR: b -> ~a\nC: a := b.0\nX := a.X + ~b.0\n");
    std::size_t seen = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Term t = TermGenerator(derive_seed(4, i), opts).term();
      for (const auto& tr : derive_transitions(t, env)) {
        REQUIRE_MESSAGE(replays(tr, env), format(t));
        ++seen;
      }
      CHECK(derive_transitions(t, env) == derive_transitions(t, env));
    }
    CHECK(seen > 1000);
  }

  TEST_CASE("lts shapes") {
    Environment none;
    Lts one = build_lts(parse("a.0"), none, none.bounds);
    CHECK(one.size() == 2);
    CHECK(one.transitions().size() == 1);
    CHECK_FALSE(one.truncated());

    Environment rec = load_scene("X := a.X\n");
    Lts loop = build_lts(parse("X"), rec, rec.bounds);
    CHECK(loop.size() == 1);
    REQUIRE(loop.transitions().size() == 1);
    CHECK(loop.transitions()[0].source == 0);
    CHECK(loop.transitions()[0].target == 0);

    Lts diamond = build_lts(parse("a.0 | b.0"), none, none.bounds);
    CHECK(diamond.size() == 4);
    CHECK(diamond.transitions().size() == 4);
  }

  TEST_CASE("lts text export") {
    Environment none;
    Lts l = build_lts(parse("a.0 | b.0"), none, none.bounds);
    CHECK(to_lts_text(l) ==
          "states 4 transitions 4 root 0\n"
          "state 0 a.0 | b.0\n"
          "state 1 0 | b.0\n"
          "state 2 a.0 | 0\n"
          "state 3 0 | 0\n"
          "trans 0 a 1 CoopL\n"
          "trans 0 b 2 CoopR\n"
          "trans 1 b 3 CoopR\n"
          "trans 2 a 3 CoopL\n");
    std::string dot = to_dot(l);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("s0 -> s1 [label=\"a (CoopL)\"]") != std::string::npos);
  }

  TEST_CASE("bounds truncate and grow monotonically") {
    Environment env = load_scene("X := a.(X | b.0)\n");
    Term root = parse("X");
    Lts small = build_lts(root, env, Bounds{5, 1000, 64});
    CHECK(small.truncated());
    CHECK(small.size() <= 5);
    Lts shallow = build_lts(root, env, Bounds{10000, 2, 64});
    CHECK(shallow.truncated());
    for (std::size_t cap : {3, 8, 20, 40}) {
      Lts a = build_lts(root, env, Bounds{cap, 1000, 64});
      Lts b = build_lts(root, env, Bounds{cap * 2, 1000, 64});
      for (const auto& s : a.states()) CHECK(b.find(s).has_value());
    }
  }

  TEST_CASE("lts construction is deterministic") {
    TermGenOptions opts;
    opts.max_depth = 4;
    for (std::uint64_t i = 0; i < 200; ++i) {
      Term t = TermGenerator(derive_seed(5, i), opts).term();
      Environment env;
      CHECK(to_lts_text(build_lts(t, env, Bounds{300, 50, 64})) == to_lts_text(build_lts(t, env, Bounds{300, 50, 64})));
    }
  }

  TEST_CASE("every edge joins known states and outgoing agrees") {
    Environment env = load_scene("X := a.X & b.0\n");
    Lts l = build_lts(parse("X | ~a.0"), env, Bounds{200, 20, 64});
    std::size_t total = 0;
    for (StateId s = 0; s < l.size(); ++s) {
      for (const auto& e : l.outgoing(s)) {
        CHECK(e.source == s);
        CHECK(e.target < l.size());
        ++total;
      }
    }
    CHECK(total == l.transitions().size());
  }

  TEST_CASE("diffusion pass binds and reports") {
    Environment env;
    Lts l = build_lts(parse("a.b.0 + a.c.0"), env, env.bounds, true);
    REQUIRE_FALSE(l.diffusion_report().empty());
    const auto& first = l.diffusion_report().front();
    CHECK(first.label == Label::named("a"));
    CHECK_FALSE(first.conflict);
    bool conflict = false;
    for (const auto& ev : l.diffusion_report()) conflict = conflict || ev.conflict;
    CHECK(conflict);
    CHECK(l.environment().lookup_diffusion(Label::named("a")).has_value());

    // The fusion spread targets mention C(a); once bound it becomes live.
    Lts spread = build_lts(parse("a.c.0 & b.c.0"), env, env.bounds, true);
    Lts plain = build_lts(parse("a.c.0 & b.c.0"), env, env.bounds, false);
    CHECK(spread.transitions().size() > plain.transitions().size());
  }

  TEST_CASE("coordinates are optional annotations") {
    Environment env;
    Lts l = build_lts(parse("a.0"), env, env.bounds);
    CHECK(l.coordinates().empty());
    l.annotate(0, 1, 2);
    CHECK(l.coordinates().at(0) == std::pair<int, int>{1, 2});
    CHECK(to_dot(l).find("p1,2") != std::string::npos);
  }
}

TEST_SUITE("semantics") {
  TEST_CASE("lts errors name the offending state") {
    Environment env = load_scene("X := X + a.0\n");
    try {
      build_lts(parse("b.X"), env, env.bounds);
      FAIL("no error");
    } catch (const DepthExceeded& e) {
      CHECK(std::string(e.what()).rfind("state 1 (X): ", 0) == 0);
    }
    try {
      build_lts(parse("b.Y"), env, env.bounds);
      FAIL("no error");
    } catch (const UnresolvedConstant& e) {
      CHECK(e.name() == "Y");
      CHECK(std::string(e.what()).rfind("state 1 (Y): ", 0) == 0);
    }
  }
}
