import pytest
from hypothesis import given, settings

from conftest import infons
from primal.oracle import SuiteSpec, formulas_by_size
from primal.syntax import (
    And, Atom, Bot, ConnectiveError, Imp, Logic, OrP, ParseError, Sequent, Top,
    node_count, parse_infon, parse_sequent, parse_sequent_file, print_infon, print_sequent,
    subformulas, tokenize,
)

p, q, r, a, b, c = (Atom(n) for n in "pqrabc")


@pytest.mark.parametrize("text, expected", [
    ("top", Top()),
    ("bot", Bot()),
    ("a -> b -> c", Imp(a, Imp(b, c))),
    ("bot | p & q", OrP(Bot(), And(p, q))),
    ("a & b & c", And(And(a, b), c)),
    ("a | b | c", OrP(OrP(a, b), c)),
    ("(a -> b) -> c", Imp(Imp(a, b), c)),
    ("a & b -> c | a", Imp(And(a, b), OrP(c, a))),
    ("  ( ( p ) )  ", p),
])
def test_parse_examples(text, expected):
    assert parse_infon(text) == expected


@pytest.mark.parametrize("phi, text", [
    (Imp(a, Imp(b, c)), "a -> b -> c"),
    (And(a, OrP(b, c)), "a & (b | c)"),
    (Bot(), "bot"),
    (Imp(Imp(a, b), c), "(a -> b) -> c"),
    (And(a, And(b, c)), "a & (b & c)"),
    (OrP(Bot(), p), "bot | p"),
])
def test_print_examples(phi, text):
    assert print_infon(phi) == text


@given(infons())
@settings(max_examples=400)
def test_round_trip(phi):
    text = print_infon(phi)
    assert parse_infon(text) == phi
    assert print_infon(parse_infon(text)) == text


def test_round_trip_enumerated():
    for logic in (Logic.P, Logic.PVEEP):
        for bucket in formulas_by_size(SuiteSpec(), logic).values():
            for phi in bucket:
                assert parse_infon(print_infon(phi)) == phi


def test_deep_terms_do_not_recurse():
    n = 50_000
    text = " -> ".join(f"p{i}" for i in range(n))
    phi = parse_infon(text)
    assert node_count(phi) == 2 * n - 1
    assert print_infon(phi) == text
    nested = "(" * n + "p" + ")" * n
    assert parse_infon(nested) == Atom("p")


def test_sequent_examples():
    s = parse_sequent("p; p -> q |- q")
    assert s.context == (p, Imp(p, q)) and s.goal == q
    s = parse_sequent("|- top")
    assert s.context == () and s.goal == Top()
    with pytest.raises(ConnectiveError):
        parse_sequent("p | q |- p", Logic.P)
    for logic in (Logic.PBOT, Logic.PBOTW):
        with pytest.raises(ConnectiveError):
            parse_sequent("p |- p | q", logic)
    assert parse_sequent("p | q |- p", Logic.PVEEP).context == (OrP(p, q),)


def test_context_dedup_keeps_first_occurrence():
    s = parse_sequent("q; p & q; q; (p & q) |- p")
    assert s.context == (q, And(p, q))
    assert print_sequent(s) == "q; p & q |- p"


@pytest.mark.parametrize("text, offset", [
    ("p ->", 4),
    ("(p", 0),
    ("p)", 1),
    ("p q", 2),
    ("-> p", 0),
    ("p ~ q", 2),
    ("", 0),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_infon(text)
    assert info.value.offset == offset


@pytest.mark.parametrize("text, offset", [
    ("p & |- q", 4),
    ("p |- q r", 7),
    ("p |- q; r", 6),
    ("p; q", 4),
    ("p |- ", 5),
])
def test_sequent_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_sequent(text)
    assert info.value.offset == offset


def test_reserved_words():
    for bad in ("top", "bot", "1x", "a-b", ""):
        with pytest.raises(ValueError):
            Atom(bad)
    assert parse_infon("topx & bot_") == And(Atom("topx"), Atom("bot_"))


def test_tokenize_positions():
    assert tokenize("p->q |-r") == [("p", 0), ("->", 1), ("q", 3), ("|-", 5), ("r", 7)]


def test_sequent_file_comments():
    text = "# header\np |- p   # trivial\n\n  \nq; q -> r |- r\n"
    seqs = parse_sequent_file(text)
    assert [print_sequent(s) for s in seqs] == ["p |- p", "q; q -> r |- r"]
    with pytest.raises(ParseError, match="line 2"):
        parse_sequent_file("p |- p\np |-\n")


def test_subformulas_examples():
    assert subformulas(parse_sequent("p & q |- p")) == {And(p, q), p, q, Top()}
    assert subformulas(parse_sequent("|- top")) == {Top()}
    s = parse_sequent("p -> q; p |- q", Logic.PBOTW)
    assert subformulas(s) == {Imp(p, q), p, q, Top(), Bot()}


@given(infons(), infons())
def test_subformula_count_bound(x, y):
    s = Sequent((x,), y, Logic.PVEEP)
    assert len(subformulas(s)) <= node_count(x) + node_count(y) + 2


def test_values_are_immutable_and_hashable():
    phi = And(p, q)
    with pytest.raises(AttributeError):
        phi.left = q
    assert hash(phi) == hash(And(Atom("p"), Atom("q")))
    assert phi != OrP(p, q)
    assert Imp(p, q).premise == p and Imp(p, q).conclusion == q
