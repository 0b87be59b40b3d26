import pytest

import physarum as ph


def test_parse_and_format_round_trip():
    t = ph.parse("a.0 + b.0 & c.0")
    assert str(t) == "a.0 + b.0 & c.0"
    assert ph.parse(str(t)) == t
    assert ph.format(ph.parse("  a .  0 ")) == "a.0"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        ph.parse("a.(")


def test_complement_and_sort():
    assert str(ph.complement(ph.parse("a.0 | ~b.0"))) == "~a.0 | b.0"
    assert ph.sort(ph.parse("a.0 + b.0")) == ["a", "b"]
    assert ph.sort(ph.parse("X"), "X := a.X\n") == ["a"]


def test_transitions():
    moves = {(a, str(t), r) for a, t, r in ph.transitions(ph.parse("a.0 | ~a.0"))}
    assert moves == {("a", "0 | ~a.0", "CoopL"), ("~a", "a.0 | 0", "CoopR"), ("tau", "0 | 0", "CoopSync")}


def test_lts_shapes():
    diamond = ph.build_lts(ph.parse("a.0 | b.0"))
    assert len(diamond) == 4
    assert len(diamond.transitions) == 4
    assert not diamond.truncated
    loop = ph.build_lts(ph.parse("X"), "X := a.X\n")
    assert loop.transitions == [(0, "a", 0, "Constant")]
    assert ph.build_lts(ph.parse("X"), "X := a.(X | b.0)\n", max_states=5).truncated
    assert diamond.to_text().startswith("states 4 transitions 4 root 0\n")
    assert diamond.traces(0, 2) == [["a"], ["b"], ["a", "b"], ["b", "a"]]


def test_bisimilarity():
    same, play = ph.bisimilar(ph.parse("a.0 + a.0"), ph.parse("a.0"))
    assert same and play == []
    same, play = ph.bisimilar(ph.parse("a.b.0 + a.c.0"), ph.parse("a.(b.0 + c.0)"))
    assert not same
    assert play == [("a", "left"), ("c", "right")]


def test_normalize():
    assert ph.normalize(ph.parse("a.0 & ~a.0")) == ph.parse("0")
    assert ph.axiom_equal(ph.parse("(a.0 + b.0) & c.0"), ph.parse("a.0 & c.0 + b.0 & c.0"))
    assert not ph.axiom_equal(ph.parse("a.0"), ph.parse("b.0"))


def test_connectives():
    r = ph.connectives(["a", "b", "c"], ["a", "b"], ["b", "c"])
    assert r["conj"] == ["b"]
    assert r["disj"] == ["a", "b", "c"]
    assert r["neg"] == ["c"]


def test_formula_and_laws():
    scene = "X := a.b.X\nprop p 0 T\nprop p 1 F\n"
    assert ph.eval_formula("p", ph.parse("X"), scene) == "(T F)^w"
    report = ph.law_report("universe a b\n", seed=0, samples=5)
    assert report.count("\nlaw ") + report.startswith("law ") == 14


def test_cli_entry():
    code, out, err = ph.run_cli(["fmt", "--help"])
    assert code == 0 and "term-file" in out
    assert ph.run_cli([])[0] == 2
