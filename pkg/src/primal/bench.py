"""Scaling benchmark: generated sequents of a given token count, timed
end to end (parse, DAG construction, decision).

Families
  chain   p0; p0 -> p1; ...; p(n-1) -> pn |- pn            (implication index)
  conj    one balanced conjunction tree |- another one     (conjunction counters)
  botw    bot; q0 -> p0; ...; qn -> pn |- p0 & ... & pn    (P[bot_w] step 3)
"""
from __future__ import annotations

import gc
import time
from dataclasses import dataclass

from .dag import build_dag
from .engine import decide_dag
from .syntax import Logic, _lex, parse_sequent

__all__ = ["FAMILIES", "BenchRow", "generate", "measure", "run_ladder"]


def _balanced(names: list[str]) -> str:
    # bottom-up pairing keeps the nesting depth logarithmic
    level = names
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(f"({level[i]} & {level[i + 1]})")
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def chain(tokens: int) -> str:
    n = max(1, (tokens - 3) // 4)
    links = "; ".join(f"p{i} -> p{i + 1}" for i in range(n))
    return f"p0; {links} |- p{n}"


def conj(tokens: int) -> str:
    # ~4 tokens per leaf on each side
    n = max(2, tokens // 8)
    names = [f"p{i}" for i in range(n)]
    return f"{_balanced(names)} |- {_balanced(names[::-1])}"


def botw(tokens: int) -> str:
    n = max(1, (tokens - 2) // 6)
    links = "; ".join(f"q{i} -> p{i}" for i in range(n))
    goal = " & ".join(f"p{i}" for i in range(n))
    return f"bot; {links} |- {goal}"


FAMILIES = {
    "chain": (chain, Logic.P),
    "conj": (conj, Logic.P),
    "botw": (botw, Logic.PBOTW),
}


def generate(family: str, tokens: int) -> tuple[str, Logic]:
    make, logic = FAMILIES[family]
    return make(tokens), logic


@dataclass
class BenchRow:
    family: str
    target: int
    tokens: int
    classes: int
    events: int
    derivable: bool
    seconds: float

    @property
    def events_per_token(self) -> float:
        return self.events / self.tokens


def measure(family: str, tokens: int, repeat: int = 1) -> BenchRow:
    """Best-of-``repeat`` wall time with the cyclic collector paused, as
    timeit does."""
    text, logic = generate(family, tokens)
    ntok = len(_lex(text))
    best = float("inf")
    verdict = None
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter()
            s = parse_sequent(text, logic)
            d = build_dag(s)
            verdict = decide_dag(d)
            best = min(best, time.perf_counter() - t0)
            del s, d
    finally:
        if was_enabled:
            gc.enable()
    return BenchRow(family, tokens, ntok, verdict.classes, verdict.events, verdict.derivable, best)


def run_ladder(
    families=tuple(FAMILIES), sizes=(10**4, 10**5, 10**6), repeat: int = 5
) -> list[BenchRow]:
    rows = []
    for family in families:
        for size in sizes:
            rows.append(measure(family, size, repeat))
    return rows
