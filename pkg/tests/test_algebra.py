import random

import pytest
from hypothesis import given, strategies as st

from primal.algebra import (
    E, FF, Evaluation, check_model, crack, dec, enc, evaluate, gr, l, pi, r,
    random_term, relevant_closure, replay_derivation, split,
)
from primal.engine import Rule, Step, decide
from primal.oracle import SuiteSpec, formulas_by_size
from primal.syntax import Logic, parse_infon, parse_sequent, subformulas

strings = st.text(alphabet="01F", max_size=20)


def test_vectors():
    assert pi("110", "110") == "000110010110001"
    assert l("000110010110001") == "110"
    assert r("000110010110001") == "110"
    assert r("11") is None
    assert enc("110", "101") == "000110011101001"
    assert dec("110", "000110011101001") == "101"
    assert dec("101", "000110011101001") is None
    assert crack("F", enc("110", "101")) == "101"
    assert crack("0", enc("110", "101")) is None
    assert crack("F", "110") is None
    assert gr("110", "101") == "000110100101001"
    assert gr("", "") == "000100001"
    assert gr("F", "110") == "000F100110001"
    assert E == {"110"}


def test_eval_vectors():
    v = Evaluation()
    assert evaluate(v, parse_infon("p")) == "101"
    assert evaluate(v, parse_infon("p & top")) == "000101010110001"
    assert evaluate(v, parse_infon("bot")) == "F"
    assert evaluate(v, parse_infon("q")) == "101101"
    assert evaluate(v, parse_infon("p | q -> p")) == "000" + gr("101", "101101") + "011" + "101" + "001"


def test_equations_on_random_terms():
    rng = random.Random(11)
    for _ in range(5000):
        x, y = random_term(rng), random_term(rng)
        assert l(pi(x, y)) == x and r(pi(x, y)) == y
        assert dec(x, enc(x, y)) == y
        assert crack(FF, enc(x, y)) == y
        assert split(gr(x, y)) == ("100", x, y)


@given(strings, strings)
def test_dec_on_arbitrary_strings(x, y):
    assert dec(x, enc(x, y)) == y


def test_pair_is_not_injective_on_arbitrary_strings():
    assert pi("010", "") == pi("", "010")
    assert l(pi("010", "")) is None  # ambiguous split, so undefined


@given(st.text(alphabet="01", max_size=15), st.text(alphabet="01", max_size=15))
def test_binary_strings_stay_binary(x, y):
    for op in (pi, enc, gr):
        assert FF not in op(x, y)


def test_eval_injective_on_enumerated_formulas():
    seen = {}
    for logic in (Logic.P, Logic.PVEEP):
        v = Evaluation(["p", "q"])
        for bucket in formulas_by_size(SuiteSpec(), logic).values():
            for phi in bucket:
                val = evaluate(v, phi)
                assert seen.setdefault(val, phi) == phi


def _values(logic, text):
    s = parse_sequent(text, logic)
    v = Evaluation.for_sequent(s)
    universe = {evaluate(v, phi) for phi in subformulas(s)}
    return s, v, universe


def test_closure_examples():
    s, v, universe = _values(Logic.P, "p; p -> q |- q")
    base = {evaluate(v, phi) for phi in s.context}
    assert evaluate(v, parse_infon("q")) in relevant_closure(Logic.P, base, universe)

    s, v, universe = _values(Logic.PBOTW, "bot; q -> p |- p")
    base = {evaluate(v, phi) for phi in s.context}
    assert evaluate(v, parse_infon("p")) in relevant_closure(Logic.PBOTW, base, universe)

    v = Evaluation(["p"])
    closed = relevant_closure(Logic.P, {"F"}, {"F", evaluate(v, parse_infon("p"))})
    assert closed == {"F"}
    assert relevant_closure(Logic.PBOT, {"F"}, {"F", "101"}) == {"F", "101"}

    with pytest.raises(ValueError):
        relevant_closure(Logic.P, {"101"}, {"110"})


@pytest.mark.parametrize("logic, text, expected", [
    (Logic.P, "p; p -> q |- q", True),
    (Logic.PBOTW, "bot |- p", False),
    (Logic.PBOT, "bot |- p", True),
    (Logic.PVEEP, "q |- p | q", True),
    (Logic.PVEEP, "p | q |- q", False),
] + [(lg, "|- top", True) for lg in Logic])
def test_check_model_examples(logic, text, expected):
    s = parse_sequent(text, logic)
    assert check_model(logic, s) is expected
    assert decide(logic, s).derivable is expected


def test_replay_examples():
    p, q = parse_infon("p"), parse_infon("q")
    imp = parse_infon("p -> q")
    v = Evaluation(["p", "q"])
    steps = [Step(p, Rule.HYPOTHESIS), Step(imp, Rule.HYPOTHESIS), Step(q, Rule.IMP_E, (0, 1))]
    assert replay_derivation(steps, v, Logic.P)
    steps = [Step(parse_infon("bot"), Rule.HYPOTHESIS), Step(parse_infon("q -> p"), Rule.HYPOTHESIS),
             Step(p, Rule.BOT_EW, (0, 1))]
    assert replay_derivation(steps, v, Logic.PBOTW)
    assert not replay_derivation(steps, v, Logic.P)
    assert replay_derivation([Step(parse_infon("top"), Rule.TOP)], v, Logic.P)
    # a wrong conclusion does not replay
    assert not replay_derivation([Step(p, Rule.HYPOTHESIS), Step(imp, Rule.HYPOTHESIS),
                                  Step(p, Rule.IMP_E, (0, 1))], v, Logic.P)
