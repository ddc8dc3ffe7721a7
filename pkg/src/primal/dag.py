"""Shared parse DAG of a sequent.

Every structurally distinct subformula becomes one *class* (the homonymy
leader of all its occurrences).  Classes are numbered densely in
construction order, so children always have smaller ids than parents.
Reverse indices give constant-time access from a class to the classes
that use it, which is what the forward-propagation engine runs on.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .syntax import AND, ATOM, BOT, IMP, ORP, TOP, Bot, Infon, Logic, Sequent, Top, postorder

__all__ = ["ParseDag", "build_dag", "atplus_classes", "atplus_subset", "positive_walk"]

_NO_PARENTS: tuple[int, ...] = ()
_FINISH = object()


@dataclass
class ParseDag:
    kind: list[int] = field(default_factory=list)
    left: list[int] = field(default_factory=list)  # -1 for leaves
    right: list[int] = field(default_factory=list)
    infon: list[Infon] = field(default_factory=list)  # leader occurrence
    and_parents: list[list[int] | None] = field(default_factory=list)
    premise_of: list[list[int] | None] = field(default_factory=list)
    conclusion_of: list[list[int] | None] = field(default_factory=list)
    orp_parents: list[list[int] | None] = field(default_factory=list)
    hypotheses: list[int] = field(default_factory=list)
    goal: int = -1
    top: int = -1
    bot: int = -1  # -1 when the logic is P and bot does not occur
    logic: Logic = Logic.P
    _index: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.kind)

    @property
    def reverse_size(self) -> int:
        return sum(
            len(v)
            for table in (self.and_parents, self.premise_of, self.conclusion_of, self.orp_parents)
            for v in table
            if v
        )

    def find(self, phi: Infon) -> int | None:
        """Class id of ``phi``, or None if it is not a subformula."""
        memo: dict[int, int] = {}
        for node in postorder([phi]):
            k = node.kind
            if k == ATOM:
                key = node.name
            elif k == TOP:
                key = "top"
            elif k == BOT:
                key = "bot"
            else:
                key = (k, memo[id(node.left)], memo[id(node.right)])
            c = self._index.get(key)
            if c is None:
                return None
            memo[id(node)] = c
        return memo[id(phi)]

    def parents(self, table: list[list[int] | None], c: int):
        return table[c] or _NO_PARENTS


def _link(table: list[list[int] | None], child: int, parent: int) -> None:
    bucket = table[child]
    if bucket is None:
        table[child] = [parent]
    else:
        bucket.append(parent)


def _index_parents(d: ParseDag) -> None:
    # reverse edges, one list per class that has parents of that kind
    n = len(d.kind)
    d.and_parents = and_parents = [None] * n
    d.premise_of = premise_of = [None] * n
    d.conclusion_of = conclusion_of = [None] * n
    d.orp_parents = orp_parents = [None] * n
    lefts, rights = d.left, d.right
    for c, k in enumerate(d.kind):
        if k == AND:
            l, r = lefts[c], rights[c]
            _link(and_parents, l, c)
            if r != l:
                _link(and_parents, r, c)
        elif k == IMP:
            _link(premise_of, lefts[c], c)
            _link(conclusion_of, rights[c], c)
        elif k == ORP:
            l, r = lefts[c], rights[c]
            _link(orp_parents, l, c)
            if r != l:
                _link(orp_parents, r, c)


def build_dag(s: Sequent, logic: Logic | str | None = None) -> ParseDag:
    """Hash-cons the sequent bottom-up into homonymy classes.

    Cost is one dict lookup per AST node, counting nodes as a tree.
    """
    logic = s.logic if logic is None else Logic(logic)
    d = ParseDag(logic=logic)
    index = d._index
    kinds, lefts, rights, infons = d.kind, d.left, d.right, d.infon

    def leaf(key, node: Infon) -> int:
        c = index.get(key)
        if c is None:
            c = index[key] = len(kinds)
            kinds.append(node.kind)
            lefts.append(-1)
            rights.append(-1)
            infons.append(node)
        return c

    d.top = leaf("top", Top())
    if logic is not Logic.P:
        d.bot = leaf("bot", Bot())

    # Post-order with a value stack: a node is pushed, then the _FINISH
    # marker, then its children; popping the marker combines the two
    # topmost values.  The walk follows the tree, so physically shared
    # subterms are revisited, but each visit is one dict lookup.
    top = d.top
    stack = [s.goal, *reversed(s.context)]
    values: list[int] = []
    pop, push, get = stack.pop, stack.append, index.get
    vpop, vpush = values.pop, values.append
    while stack:
        node = pop()
        if node is _FINISH:
            node = pop()
            r = vpop()
            l = vpop()
            k = node.kind
            key = (k, l, r)
            c = get(key)
            if c is None:
                c = index[key] = len(kinds)
                kinds.append(k)
                lefts.append(l)
                rights.append(r)
                infons.append(node)
            vpush(c)
            continue
        k = node.kind
        if k == ATOM:
            c = get(node.name)
            vpush(leaf(node.name, node) if c is None else c)
        elif k == TOP:
            vpush(top)
        elif k == BOT:
            c = d.bot = leaf("bot", node)
            vpush(c)
        else:
            push(node)
            push(_FINISH)
            push(node.right)
            push(node.left)
    _index_parents(d)
    # values now holds one class per root: the context in order, then the goal
    d.goal = values[-1]
    d.hypotheses = list(dict.fromkeys(values[:-1]))
    return d

def positive_walk(d: ParseDag, roots, flags: bytearray) -> int:
    """Set ``flags[c] = 1`` for every class on a positive path from ``roots``
    (through both conjuncts, both disjuncts, implication conclusions).

    Already-flagged classes are not re-entered.  Returns the number of
    classes visited.
    """
    kinds, lefts, rights = d.kind, d.left, d.right
    visits = 0
    stack = [c for c in roots]
    while stack:
        c = stack.pop()
        if flags[c]:
            continue
        flags[c] = 1
        visits += 1
        k = kinds[c]
        if k == AND or k == ORP:
            stack.append(rights[c])
            stack.append(lefts[c])
        elif k == IMP:
            stack.append(rights[c])
    return visits


def _is_leaf(kind: int) -> bool:
    return kind == ATOM or kind == TOP or kind == BOT


def atplus_classes(d: ParseDag, root: int) -> set[int]:
    """Classes of the positive atoms (atoms, top, bot) of the formula at ``root``."""
    flags = bytearray(len(d))
    positive_walk(d, [root], flags)
    kinds = d.kind
    return {c for c in range(len(d)) if flags[c] and _is_leaf(kinds[c])}


def _atplus_subset(d: ParseDag) -> tuple[bool, int]:
    # top is available in every context, so it counts as a positive atom
    # of the context; without it "bot; q -> p |- top & p" would be refused.
    in_context = bytearray(len(d))
    visits = positive_walk(d, d.hypotheses, in_context)
    in_context[d.top] = 1
    kinds = d.kind
    seen = bytearray(len(d))
    stack = [d.goal]
    while stack:
        c = stack.pop()
        if seen[c]:
            continue
        seen[c] = 1
        visits += 1
        k = kinds[c]
        if k == AND or k == ORP:
            stack.append(d.right[c])
            stack.append(d.left[c])
        elif k == IMP:
            stack.append(d.right[c])
        elif not in_context[c]:
            return False, visits
    return True, visits


def atplus_subset(d: ParseDag) -> bool:
    """True iff every positive atom of the goal is a positive atom of the
    context (``top`` is always available)."""
    return _atplus_subset(d)[0]
