"""Linear-time derivability for P, P[bot], P[bot_w] and P[\\/p].

All four deciders share one forward-propagation loop over the parse DAG.
A class is *derived* once; when it is processed, each reverse-index entry
pointing at it is looked at once.  A conjunction keeps a countdown of
underived conjuncts; an implication fires when both it and its premise
are derived, whichever comes second.  So the loop does at most
``classes + reverse_size`` units of work, and that is what ``events``
counts.

P[bot] is decided as "goal or bot in P" (a shortest derivation of bot can
never use bot-elimination).  P[bot_w] runs P first; if that fails but bot
is derivable, derivability reduces to the positive-atom inclusion test of
:func:`primal.dag.atplus_subset`.

Derivations are lists of :class:`Step`.  Premise indices are 0-based in
memory and printed 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .dag import ParseDag, _atplus_subset, build_dag
from .syntax import (
    AND, ATOM, BOT, IMP, ORP, TOP,
    And, Bot, Imp, Infon, Logic, OrP, Sequent, Top,
    check_connectives, parse_infon, postorder, print_infon,
)

__all__ = [
    "Rule", "Step", "Verdict", "decide", "decide_dag", "check_derivation",
    "derivation_error", "format_derivation", "derivation_records",
    "derivation_from_records", "EVENTS_PER_CLASS",
]

# events <= EVENTS_PER_CLASS * (classes + reverse-index size), all logics
EVENTS_PER_CLASS = 2


class Rule(str, Enum):
    HYPOTHESIS = "Hypothesis"
    TOP = "TopAxiom"
    AND_I = "AndI"
    AND_E1 = "AndE1"
    AND_E2 = "AndE2"
    IMP_I = "ImpI"
    IMP_E = "ImpE"
    ORP_I1 = "OrPI1"
    ORP_I2 = "OrPI2"
    BOT_E = "BotE"
    BOT_EW = "BotEw"

    def __str__(self) -> str:
        return self.value


ARITY = {
    Rule.HYPOTHESIS: 0, Rule.TOP: 0,
    Rule.AND_I: 2, Rule.AND_E1: 1, Rule.AND_E2: 1,
    Rule.IMP_I: 1, Rule.IMP_E: 2,
    Rule.ORP_I1: 1, Rule.ORP_I2: 1,
    Rule.BOT_E: 1, Rule.BOT_EW: 2,
}

_ONLY_IN = {
    Rule.BOT_E: Logic.PBOT,
    Rule.BOT_EW: Logic.PBOTW,
    Rule.ORP_I1: Logic.PVEEP,
    Rule.ORP_I2: Logic.PVEEP,
}


@dataclass(frozen=True)
class Step:
    infon: Infon
    rule: Rule
    premises: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.premises:
            return f"{print_infon(self.infon)}  {self.rule.value}"
        idx = ",".join(str(i + 1) for i in self.premises)
        return f"{print_infon(self.infon)}  {self.rule.value}({idx})"


@dataclass
class Verdict:
    derivable: bool
    derivation: list[Step] | None = None
    events: int = 0
    classes: int = 0


class _Saturation:
    """Forward propagation state for one decider run."""

    def __init__(self, d: ParseDag, disjunction: bool, record: bool) -> None:
        self.d = d
        self.disjunction = disjunction
        self.record = record
        n = len(d)
        self.derived = bytearray(n)
        self.order: list[int] = []  # classes in derivation order
        self.just: dict[int, tuple[Rule, tuple[int, ...]]] = {}
        # and-class -> underived conjuncts; 0 until a conjunct is first derived
        self.pending = bytearray(n)
        self.stack: list[int] = []
        self.events = 0

    def mark(self, c: int, rule: Rule, premises: tuple[int, ...] = ()) -> None:
        if self.derived[c]:
            return
        self.derived[c] = 1
        self.order.append(c)
        if self.record:
            self.just[c] = (rule, premises)
        self.stack.append(c)

    def run(self, stop: tuple[int, ...]) -> None:
        """Propagate until nothing changes or some class in ``stop`` is derived."""
        d = self.d
        derived, mark, stack, pending = self.derived, self.mark, self.stack, self.pending
        kinds, lefts, rights = d.kind, d.left, d.right
        and_parents, premise_of = d.and_parents, d.premise_of
        conclusion_of, orp_parents = d.conclusion_of, d.orp_parents
        disjunction = self.disjunction
        events = self.events
        if any(derived[c] for c in stop):
            return
        while stack:
            c = stack.pop()
            events += 1
            k = kinds[c]
            if k == AND:
                mark(lefts[c], Rule.AND_E1, (c,))
                mark(rights[c], Rule.AND_E2, (c,))
            elif k == IMP and derived[lefts[c]]:
                mark(rights[c], Rule.IMP_E, (lefts[c], c))
            ps = and_parents[c]
            if ps:
                events += len(ps)
                for a in ps:
                    left = pending[a]
                    if left == 0:
                        left = 1 if lefts[a] == rights[a] else 2
                    left -= 1
                    pending[a] = left
                    if left == 0:
                        mark(a, Rule.AND_I, (lefts[a], rights[a]))
            ps = premise_of[c]
            if ps:
                events += len(ps)
                for i in ps:
                    if derived[i]:
                        mark(rights[i], Rule.IMP_E, (c, i))
            ps = conclusion_of[c]
            if ps:
                events += len(ps)
                for i in ps:
                    mark(i, Rule.IMP_I, (c,))
            if disjunction:
                ps = orp_parents[c]
                if ps:
                    events += len(ps)
                    for o in ps:
                        mark(o, Rule.ORP_I1 if lefts[o] == c else Rule.ORP_I2, (c,))
            if derived[stop[0]] or (len(stop) > 1 and derived[stop[1]]):
                break
        self.events = events

    def extract(self, target: int) -> list[Step]:
        """Steps needed for ``target``, in derivation order."""
        just = self.just
        needed = set()
        todo = [target]
        while todo:
            c = todo.pop()
            if c in needed:
                continue
            needed.add(c)
            todo.extend(just[c][1])
        position: dict[int, int] = {}
        steps = []
        infons = self.d.infon
        for c in self.order:
            if c in needed:
                rule, prem = just[c]
                position[c] = len(steps)
                steps.append(Step(infons[c], rule, tuple(position[p] for p in prem)))
        return steps


def _start(d: ParseDag, disjunction: bool, record: bool) -> _Saturation:
    sat = _Saturation(d, disjunction, record)
    for h in d.hypotheses:
        sat.mark(h, Rule.HYPOTHESIS)
    sat.mark(d.top, Rule.TOP)
    return sat


def _rebuild_from_bot(sat: _Saturation) -> None:
    """Record a bot_w derivation of the goal once bot is derived and the
    positive atoms fit: open every context formula along its positive
    spine (and-elimination, bot_w on implications), then assemble the goal
    by and-introduction and implication-introduction."""
    d = sat.d
    kinds, lefts, rights = d.kind, d.left, d.right
    bot = d.bot
    seen = set()
    stack = list(d.hypotheses)
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        k = kinds[c]
        if k == AND:
            sat.mark(lefts[c], Rule.AND_E1, (c,))
            sat.mark(rights[c], Rule.AND_E2, (c,))
            stack.append(rights[c])
            stack.append(lefts[c])
        elif k == IMP:
            sat.mark(rights[c], Rule.BOT_EW, (bot, c))
            stack.append(rights[c])
    sat.stack.clear()
    # goal side, children before parents
    todo = [(d.goal, False)]
    while todo:
        c, ready = todo.pop()
        if sat.derived[c]:
            continue
        k = kinds[c]
        if ready:
            if k == AND:
                sat.mark(c, Rule.AND_I, (lefts[c], rights[c]))
            else:
                sat.mark(c, Rule.IMP_I, (rights[c],))
            continue
        if k == AND:
            todo.append((c, True))
            todo.append((rights[c], False))
            todo.append((lefts[c], False))
        elif k == IMP:
            todo.append((c, True))
            todo.append((rights[c], False))
        else:
            raise AssertionError("positive atom of the goal not available from the context")
    sat.stack.clear()


def decide_dag(d: ParseDag, want_proof: bool = False) -> Verdict:
    """Decide the sequent already compiled into ``d`` (in ``d.logic``)."""
    logic = d.logic
    n = len(d)
    goal = d.goal
    if logic is Logic.P or logic is Logic.PVEEP:
        sat = _start(d, logic is Logic.PVEEP, want_proof)
        sat.run((goal,))
        ok = bool(sat.derived[goal])
        proof = sat.extract(goal) if ok and want_proof else None
        return Verdict(ok, proof, sat.events, n)

    sat = _start(d, False, want_proof)
    if logic is Logic.PBOT:
        sat.run((goal, d.bot))
        if sat.derived[goal]:
            proof = sat.extract(goal) if want_proof else None
            return Verdict(True, proof, sat.events, n)
        if sat.derived[d.bot]:
            proof = None
            if want_proof:
                proof = sat.extract(d.bot)
                proof.append(Step(d.infon[goal], Rule.BOT_E, (len(proof) - 1,)))
            return Verdict(True, proof, sat.events, n)
        return Verdict(False, None, sat.events, n)

    # P[bot_w]: the three-step procedure
    sat.run((goal,))
    if sat.derived[goal]:
        proof = sat.extract(goal) if want_proof else None
        return Verdict(True, proof, sat.events, n)
    if not sat.derived[d.bot]:
        return Verdict(False, None, sat.events, n)
    ok, visits = _atplus_subset(d)
    events = sat.events + visits
    proof = None
    if ok and want_proof:
        _rebuild_from_bot(sat)
        proof = sat.extract(goal)
    return Verdict(ok, proof, events, n)


def decide(logic: Logic | str, s: Sequent, want_proof: bool = False) -> Verdict:
    """Decide ``s`` in ``logic``.  Raises ConnectiveError for primal
    disjunction outside P[\\/p]."""
    logic = Logic(logic)
    check_connectives(s, logic)
    return decide_dag(build_dag(s, logic), want_proof)


# -- independent checking --------------------------------------------------

def _has_orp(phi: Infon) -> bool:
    return any(node.kind == ORP for node in postorder([phi]))


def derivation_error(logic: Logic | str, s: Sequent, steps: list[Step]) -> str | None:
    """First problem with ``steps`` as a derivation of ``s`` in ``logic``,
    or None if it is a correct derivation.

    Works directly on formulas; shares nothing with the decider.
    """
    logic = Logic(logic)
    if not steps:
        return "empty derivation"
    hyps = set(s.context)
    for k, step in enumerate(steps, 1):
        phi, rule, prem = step.infon, step.rule, step.premises
        where = f"step {k}"
        if not isinstance(rule, Rule):
            return f"{where}: unknown rule {rule!r}"
        if rule in _ONLY_IN and _ONLY_IN[rule] is not logic:
            return f"{where}: rule {rule.value} is not available in {logic.value}"
        if len(prem) != ARITY[rule]:
            return f"{where}: {rule.value} takes {ARITY[rule]} premises"
        for i in prem:
            if type(i) is not int or not 0 <= i < k - 1:
                return f"{where}: premise index {i!r} does not point at an earlier step"
        if not logic.allows_orp and _has_orp(phi):
            return f"{where}: primal disjunction is not a connective of {logic.value}"
        a = steps[prem[0]].infon if prem else None
        b = steps[prem[1]].infon if len(prem) > 1 else None
        if rule is Rule.HYPOTHESIS:
            ok = phi in hyps
        elif rule is Rule.TOP:
            ok = isinstance(phi, Top)
        elif rule is Rule.AND_I:
            ok = isinstance(phi, And) and phi.left == a and phi.right == b
        elif rule is Rule.AND_E1:
            ok = isinstance(a, And) and a.left == phi
        elif rule is Rule.AND_E2:
            ok = isinstance(a, And) and a.right == phi
        elif rule is Rule.IMP_I:
            ok = isinstance(phi, Imp) and phi.conclusion == a
        elif rule is Rule.IMP_E:
            ok = isinstance(b, Imp) and b.premise == a and b.conclusion == phi
        elif rule is Rule.ORP_I1:
            ok = isinstance(phi, OrP) and phi.left == a
        elif rule is Rule.ORP_I2:
            ok = isinstance(phi, OrP) and phi.right == a
        elif rule is Rule.BOT_E:
            ok = isinstance(a, Bot)
        else:
            ok = isinstance(a, Bot) and isinstance(b, Imp) and b.conclusion == phi
        if not ok:
            return f"{where}: {print_infon(phi)} is not an instance of {rule.value}"
    if steps[-1].infon != s.goal:
        return "last step is not the goal"
    return None


def check_derivation(logic: Logic | str, s: Sequent, steps: list[Step]) -> bool:
    return derivation_error(logic, s, steps) is None


def format_derivation(steps: list[Step]) -> str:
    texts = [print_infon(st.infon) for st in steps]
    width = max(map(len, texts), default=0)
    num = len(str(len(steps)))
    lines = []
    for k, (text, st) in enumerate(zip(texts, steps), 1):
        just = st.rule.value
        if st.premises:
            just += "(" + ",".join(str(i + 1) for i in st.premises) + ")"
        lines.append(f"{k:>{num}}. {text:<{width}}  {just}")
    return "\n".join(lines)


def derivation_records(steps: list[Step]) -> list[dict]:
    """JSON-ready form; premise indices are 1-based."""
    return [
        {"infon": print_infon(st.infon), "rule": st.rule.value,
         "premises": [i + 1 for i in st.premises]}
        for st in steps
    ]


def derivation_from_records(records: list[dict]) -> list[Step]:
    return [
        Step(parse_infon(r["infon"]), Rule(r["rule"]), tuple(i - 1 for i in r["premises"]))
        for r in records
    ]
