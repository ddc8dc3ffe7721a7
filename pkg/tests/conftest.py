import pytest
from hypothesis import strategies as st

from primal.syntax import And, Atom, Bot, Imp, OrP, Top

# acceptance lines collected by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []

ATOMS = st.sampled_from(["p", "q", "r", "s"]).map(Atom)
LEAVES = st.one_of(ATOMS, st.just(Top()), st.just(Bot()))


def infons(orp: bool = True, max_leaves: int = 12):
    ops = [And, Imp] + ([OrP] if orp else [])
    return st.recursive(
        LEAVES,
        lambda kids: st.tuples(st.sampled_from(ops), kids, kids).map(lambda t: t[0](t[1], t[2])),
        max_leaves=max_leaves,
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
