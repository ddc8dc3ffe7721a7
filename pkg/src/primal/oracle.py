"""Reference decider and sequent generators for differential testing.

:func:`oracle_decide` is deliberately naive: it sweeps the subformula set
of the sequent, applying every rule whose conclusion is a subformula,
until a sweep adds nothing.  Restricting the search to subformulas is
sound and complete because shortest derivations in these calculi are
local (they mention only subformulas of the sequent); for bot in P[bot]
and P[bot_w] the extra rules only ever conclude subformulas as well.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .syntax import (
    And, Atom, Bot, Imp, Infon, Logic, OrP, Sequent, Top,
    check_connectives, subformulas,
)

__all__ = [
    "SuiteSpec", "oracle_decide", "formulas_by_size", "enumerate_sequents",
    "exhaustive_sequents", "random_sequents", "random_formula",
]


@dataclass(frozen=True)
class SuiteSpec:
    atoms: int = 2
    max_nodes: int = 7
    max_context: int = 2
    exhaustive_cap: int = 50_000
    random_samples: int = 100_000
    seed: int = 0x5EED_1F0


def oracle_decide(logic: Logic | str, s: Sequent, rounds: list | None = None) -> bool:
    """Naive fixpoint over subformulas.  If ``rounds`` is a list, the number
    of sweeps that changed something is appended to it."""
    logic = Logic(logic)
    check_connectives(s, logic)
    universe = subformulas(s.with_logic(logic))
    have: set[Infon] = {Top(), *s.context}
    bot = Bot()
    productive = 0
    while True:
        if logic is Logic.PBOT and bot in have:
            have = set(universe)
            productive += 1
            break
        before = len(have)
        for phi in universe:
            if phi in have:
                # eliminations
                if isinstance(phi, And):
                    have.add(phi.left)
                    have.add(phi.right)
                elif isinstance(phi, Imp):
                    if phi.premise in have:
                        have.add(phi.conclusion)
                    elif logic is Logic.PBOTW and bot in have:
                        have.add(phi.conclusion)
            # introductions
            elif isinstance(phi, And):
                if phi.left in have and phi.right in have:
                    have.add(phi)
            elif isinstance(phi, Imp):
                if phi.conclusion in have:
                    have.add(phi)
            elif isinstance(phi, OrP):
                if logic is Logic.PVEEP and (phi.left in have or phi.right in have):
                    have.add(phi)
        if len(have) == before:
            break
        productive += 1
    if rounds is not None:
        rounds.append(productive)
    return s.goal in have


def _leaves(atoms: int) -> list[Infon]:
    names = "pqrstuvw"
    out: list[Infon] = [Atom(names[i] if i < len(names) else f"a{i}") for i in range(atoms)]
    return out + [Top(), Bot()]


def formulas_by_size(spec: SuiteSpec, logic: Logic | str) -> dict[int, list[Infon]]:
    """All formulas with at most ``spec.max_nodes`` nodes, keyed by node count."""
    ops = [And, Imp] + ([OrP] if Logic(logic).allows_orp else [])
    by_size = {1: _leaves(spec.atoms)}
    for n in range(3, spec.max_nodes + 1, 2):
        bucket = []
        for op in ops:
            for ls in range(1, n - 1, 2):
                for a in by_size[ls]:
                    for b in by_size[n - 1 - ls]:
                        bucket.append(op(a, b))
        by_size[n] = bucket
    return by_size


class _Pool:
    """Formulas sorted by size, for lazy enumeration of contexts."""

    def __init__(self, by_size: dict[int, list[Infon]]) -> None:
        self.flat: list[Infon] = []
        self.sizes: list[int] = []
        self.span: dict[int, tuple[int, int]] = {}
        for size in sorted(by_size):
            lo = len(self.flat)
            self.flat += by_size[size]
            self.sizes += [size] * len(by_size[size])
            self.span[size] = (lo, len(self.flat))

    def contexts(self, m: int, total: int, start: int = 0) -> Iterator[tuple[Infon, ...]]:
        """Sets of ``m`` distinct formulas (indices from ``start`` on) whose
        sizes add up to ``total``."""
        if m == 1:
            lo, hi = self.span.get(total, (0, 0))
            for j in range(max(lo, start), hi):
                yield (self.flat[j],)
            return
        for i in range(start, len(self.flat)):
            if self.sizes[i] * m > total:
                return
            for rest in self.contexts(m - 1, total - self.sizes[i], i + 1):
                yield (self.flat[i], *rest)


def exhaustive_sequents(spec: SuiteSpec, logic: Logic | str) -> Iterator[Sequent]:
    """Every sequent within the bounds, smallest total size first, stopping
    after ``spec.exhaustive_cap`` sequents."""
    logic = Logic(logic)
    by_size = formulas_by_size(spec, logic)
    pool = _Pool(by_size)
    count = 0
    max_total = spec.max_nodes * (spec.max_context + 1)
    for total in range(1, max_total + 1):
        for m in range(spec.max_context + 1):
            for goal_size in by_size:
                rest = total - goal_size
                if rest < m or (m == 0 and rest != 0):
                    continue
                contexts = [()] if m == 0 else pool.contexts(m, rest)
                for ctx in contexts:
                    for goal in by_size[goal_size]:
                        if count >= spec.exhaustive_cap:
                            return
                        yield Sequent(ctx, goal, logic)
                        count += 1


def random_formula(rng: random.Random, by_size: dict[int, list[Infon]]) -> Infon:
    return rng.choice(by_size[rng.choice(list(by_size))])


def _pieces(phi: Infon) -> list[Infon]:
    out = [phi]
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, (And, Imp, OrP)):
            out += [node.left, node.right]
            stack += [node.left, node.right]
    return out


def random_sequents(spec: SuiteSpec, logic: Logic | str) -> Iterator[Sequent]:
    """``spec.random_samples`` seeded random sequents.  Half of the goals are
    built from pieces of the context so that derivable cases are common."""
    logic = Logic(logic)
    by_size = formulas_by_size(spec, logic)
    rng = random.Random(spec.seed)
    ops = [And, Imp] + ([OrP] if logic.allows_orp else [])
    for _ in range(spec.random_samples):
        m = rng.randint(0, spec.max_context)
        ctx = tuple(random_formula(rng, by_size) for _ in range(m))
        if ctx and rng.random() < 0.5:
            pieces = [p for phi in ctx for p in _pieces(phi)] + [Top(), Bot()]
            goal = rng.choice(pieces)
            if rng.random() < 0.5:
                goal = rng.choice(ops)(goal, rng.choice(pieces))
        else:
            goal = random_formula(rng, by_size)
        yield Sequent(ctx, goal, logic)


def enumerate_sequents(spec: SuiteSpec, logic: Logic | str) -> Iterator[Sequent]:
    """The exhaustive part followed by the random part; a pure function of
    ``spec`` and ``logic``."""
    yield from exhaustive_sequents(spec, logic)
    yield from random_sequents(spec, logic)
