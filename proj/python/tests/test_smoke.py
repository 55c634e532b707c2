import pytest

import rekit


def test_parse_and_measures():
    r = rekit.parse("(a+b)*a")
    assert str(r) == "(a+b)*a"
    assert rekit.measures(r) == {"size": 7, "alph": 3, "rpn": 6}
    assert not r.nullable
    assert rekit.parse("((a))b") == rekit.parse("ab")
    assert hash(rekit.parse("ab")) == hash(rekit.parse("ab"))


def test_parse_error():
    with pytest.raises(rekit.ParseError):
        rekit.parse("(a")
    assert issubclass(rekit.ParseError, ValueError)


def test_normal_forms():
    r = rekit.parse("(a*b*)*")
    assert not rekit.is_snf(r)
    assert str(rekit.to_snf(r)) == "(a+b)*"
    assert str(rekit.reduce(rekit.parse("(@e(a+@0))**b"))) == "a*b"
    assert rekit.is_reduced(rekit.parse("a*b"))


def test_constructions():
    r = rekit.parse("(a+b)*a")
    pos = rekit.position_automaton(r)
    assert pos.num_states == 4
    assert pos.is_homogeneous
    assert pos.alphabet == ["a", "b"]
    f = rekit.follow_automaton(r)
    pd = rekit.pd_automaton(r)
    assert f.num_states <= pos.num_states
    assert pd.num_states == 2
    for a in (pos, f, pd, rekit.position_automaton_snf(r)):
        assert rekit.language(a, 5) == rekit.language(r, 5)
    assert "a" in rekit.language(r, 3)
    assert "ab" not in rekit.language(r, 3)
    assert rekit.convert("(a+b)*a", "pos") == pos


def test_reductions_and_json():
    pos = rekit.position_automaton(rekit.parse("(a+b)*a"))
    assert rekit.r_equiv(pos).num_states == 2
    assert rekit.autobisimulation(pos) == [[0, 1, 2], [3]]
    lr = rekit.lr_equiv(pos)
    assert rekit.language(lr, 6) == rekit.language(pos, 6)
    back = rekit.Nfa.from_json(pos.to_json())
    assert back == pos
    assert rekit.isomorphic(back, pos)
    assert "digraph" in pos.to_dot()
    with pytest.raises(rekit.Error):
        rekit.Nfa.from_json("{")
    dfa = rekit.minimal_dfa(pos)
    assert dfa.is_deterministic
    assert dfa.num_states == 2


def test_generation():
    assert rekit.count_words(1, 1) == 3
    big = rekit.count_words(10, 60)
    assert isinstance(big, int) and big > 2**64
    texts = rekit.generate(3, 20, 5, seed=7)
    assert texts == rekit.generate(3, 20, 5, seed=7)
    assert len(texts) == 5
    assert all(rekit.measures(rekit.parse(t))["size"] == 20 for t in texts)
    assert rekit.count_words_grammar('S := "a" S | "b" ;', 1, 3) == 1


def test_experiment_csv():
    csv = rekit.run_experiment([10], 3, 40, seed=5, threads=2)
    header, row = csv.strip().split("\n")
    assert header.startswith("size,k,samples")
    assert row.startswith("10,3,40")
    assert csv == rekit.run_experiment([10], 3, 40, seed=5, threads=1)
