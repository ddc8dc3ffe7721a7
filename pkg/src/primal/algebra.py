"""Plain string model of infon logic.

Elements are strings over ``0``, ``1`` and ``F`` (the extra letter standing
for bot).  Symbols of the formula alphabet have fixed 3-bit codes, and the
operations are literal concatenations::

    pi(x, y)  = ( x & y )       enc(x, y) = ( x -> y )       gr(x, y) = ( x | y )

so the value of a formula is just its own coded text.  Atom number ``i`` is
written as ``i + 1`` unary strokes.

Projections, ``crack`` and closure parse strings back into tokens: ``F`` is
a one-letter token and binary letters are read three at a time.  A pair or
ciphertext must split uniquely at one connective token at bracket depth one;
anything else leaves the partial operations undefined (``None``).
"""
from __future__ import annotations

import re
from typing import Iterable

from .engine import Rule, Step
from .syntax import AND, ATOM, BOT, IMP, TOP, Infon, Logic, Sequent, atoms_of, subformulas

__all__ = [
    "LPAREN", "RPAREN", "AND_CODE", "IMP_CODE", "OR_CODE", "STROKE", "TOP_CODE", "FF", "E",
    "pi", "l", "r", "enc", "dec", "crack", "gr", "split",
    "Evaluation", "evaluate", "random_term", "relevant_closure", "check_model", "replay_derivation",
]

LPAREN = "000"
RPAREN = "001"
AND_CODE = "010"
IMP_CODE = "011"
OR_CODE = "100"
STROKE = "101"
TOP_CODE = "110"
FF = "F"
E = frozenset({TOP_CODE})

_CONNECTIVES = frozenset({AND_CODE, IMP_CODE, OR_CODE})
_WELL_TOKENIZED = re.compile(r"(?:F|[01]{3})*\Z")
_TOKEN = re.compile(r"F|[01]{3}")


def pi(x: str, y: str) -> str:
    return LPAREN + x + AND_CODE + y + RPAREN


def enc(x: str, y: str) -> str:
    return LPAREN + x + IMP_CODE + y + RPAREN


def gr(x: str, y: str) -> str:
    return LPAREN + x + OR_CODE + y + RPAREN


def split(z: str) -> tuple[str, str, str] | None:
    """Decompose ``z`` as ``( x op y )``; returns ``(op_code, x, y)`` or None."""
    if len(z) < 9 or not z.startswith(LPAREN) or not z.endswith(RPAREN):
        return None
    if not _WELL_TOKENIZED.match(z):
        return None
    tokens = _TOKEN.findall(z)
    depth = 0
    cut = -1
    for i in range(1, len(tokens) - 1):
        t = tokens[i]
        if t == LPAREN:
            depth += 1
        elif t == RPAREN:
            depth -= 1
            if depth < 0:
                return None
        elif depth == 0 and t in _CONNECTIVES:
            if cut >= 0:
                return None  # ambiguous split
            cut = i
    if depth != 0 or cut < 0:
        return None
    return tokens[cut], "".join(tokens[1:cut]), "".join(tokens[cut + 1:-1])


def l(z: str) -> str | None:
    parts = split(z)
    return parts[1] if parts and parts[0] == AND_CODE else None


def r(z: str) -> str | None:
    parts = split(z)
    return parts[2] if parts and parts[0] == AND_CODE else None


def dec(x: str, z: str) -> str | None:
    """Strip the key: defined exactly when ``z == enc(x, y)`` for some ``y``."""
    head = LPAREN + x + IMP_CODE
    if len(z) >= len(head) + len(RPAREN) and z.startswith(head) and z.endswith(RPAREN):
        return z[len(head):-len(RPAREN)]
    return None


def crack(x: str, z: str) -> str | None:
    """Payload of ciphertext ``z`` under any key, provided ``x`` is ``F``."""
    if x != FF:
        return None
    parts = split(z)
    return parts[2] if parts and parts[0] == IMP_CODE else None


class Evaluation:
    """Atom numbering for the string model; atoms get the next free ordinal
    the first time they are evaluated."""

    def __init__(self, atoms: Iterable[str] = ()) -> None:
        self.ordinal: dict[str, int] = {}
        for name in atoms:
            self.register(name)

    @classmethod
    def for_sequent(cls, s: Sequent) -> Evaluation:
        return cls(atoms_of([*s.context, s.goal]))

    def register(self, name: str) -> int:
        return self.ordinal.setdefault(name, len(self.ordinal))

    def __call__(self, phi: Infon) -> str:
        return evaluate(self, phi)


def evaluate(v: Evaluation, phi: Infon) -> str:
    # the value is the coded text of phi, so emit it left to right
    out: list[str] = []
    stack: list = [phi]
    while stack:
        node = stack.pop()
        if type(node) is str:
            out.append(node)
            continue
        k = node.kind
        if k == ATOM:
            out.append(STROKE * (v.register(node.name) + 1))
        elif k == TOP:
            out.append(TOP_CODE)
        elif k == BOT:
            out.append(FF)
        else:
            op = IMP_CODE if k == IMP else AND_CODE if k == AND else OR_CODE
            stack += [RPAREN, node.right, op, node.left, LPAREN]
    return "".join(out)


def random_term(rng, max_depth: int = 4) -> str:
    """A random well-tokenized term: stroke runs, ``110`` and ``F`` at the
    leaves, joined by pi, enc and gr.  These are the strings on which the
    pair and crack equations are meant to hold; on arbitrary strings pi is
    not injective (``pi("010", "") == pi("", "010")``)."""
    if max_depth == 0 or rng.random() < 0.3:
        pick = rng.randrange(3)
        if pick == 0:
            return STROKE * rng.randint(1, 4)
        return TOP_CODE if pick == 1 else FF
    op = rng.choice((pi, enc, gr))
    return op(random_term(rng, max_depth - 1), random_term(rng, max_depth - 1))


def relevant_closure(logic: Logic | str, base: Iterable[str], universe: Iterable[str]) -> set[str]:
    """Least set ``M`` with ``base <= M <= universe`` closed under the
    closure conditions of ``logic``, read inside ``universe``.

    Conditions used: E-membership; pairs are in M iff both components are;
    decryption with a held key; encryption of a held plaintext under any key
    (only for ciphertexts present in the universe); P[bot]: holding F gives
    everything; P[bot_w]: holding F decrypts every held ciphertext;
    P[\\/p]: a group-key string is held when one of its members is.
    """
    logic = Logic(logic)
    universe = set(universe)
    held = set(base)
    if not held <= universe:
        raise ValueError("base is not contained in the universe")
    held |= E & universe
    shapes = {z: split(z) for z in universe}
    if logic is Logic.PBOT and FF in held:
        return universe
    changed = True
    while changed:
        changed = False
        for z, shape in shapes.items():
            if shape is None:
                continue
            op, x, y = shape
            if z in held:
                if op == AND_CODE:
                    new = [c for c in (l(z), r(z)) if c in universe and c not in held]
                elif op == IMP_CODE:
                    new = []
                    if x in held:
                        new.append(dec(x, z))
                    if logic is Logic.PBOTW and FF in held:
                        new.append(crack(FF, z))
                    new = [c for c in new if c in universe and c not in held]
                else:
                    new = []
                if new:
                    held.update(new)
                    changed = True
            else:
                if op == AND_CODE:
                    ok = x in held and y in held
                elif op == IMP_CODE:
                    ok = y in held
                else:
                    ok = logic is Logic.PVEEP and (x in held or y in held)
                if ok:
                    held.add(z)
                    changed = True
        if logic is Logic.PBOT and FF in held:
            return universe
    return held


def check_model(logic: Logic | str, s: Sequent) -> bool:
    """Is the goal's value in the closure of the context's values, inside
    the values of the sequent's subformulas?"""
    logic = Logic(logic)
    s = s.with_logic(logic)
    v = Evaluation.for_sequent(s)
    universe = {evaluate(v, phi) for phi in subformulas(s)}
    base = {evaluate(v, phi) for phi in s.context}
    return evaluate(v, s.goal) in relevant_closure(logic, base, universe)


def replay_derivation(steps: list[Step], v: Evaluation, logic: Logic | str) -> bool:
    """Re-run a derivation on string values: every step must come out of
    earlier values by exactly one algebra operation."""
    logic = Logic(logic)
    values: list[str] = []
    for step in steps:
        phi, rule, prem = step.infon, step.rule, step.premises
        val = evaluate(v, phi)
        a = values[prem[0]] if prem else None
        b = values[prem[1]] if len(prem) > 1 else None
        if rule is Rule.HYPOTHESIS:
            ok = True
        elif rule is Rule.TOP:
            ok = val in E
        elif rule is Rule.AND_I:
            ok = pi(a, b) == val
        elif rule is Rule.AND_E1:
            ok = l(a) == val
        elif rule is Rule.AND_E2:
            ok = r(a) == val
        elif rule is Rule.IMP_I:
            ok = phi.kind == IMP and enc(evaluate(v, phi.premise), a) == val
        elif rule is Rule.IMP_E:
            ok = dec(a, b) == val
        elif rule is Rule.ORP_I1:
            ok = logic is Logic.PVEEP and gr(a, evaluate(v, phi.right)) == val
        elif rule is Rule.ORP_I2:
            ok = logic is Logic.PVEEP and gr(evaluate(v, phi.left), a) == val
        elif rule is Rule.BOT_E:
            ok = logic is Logic.PBOT and a == FF
        elif rule is Rule.BOT_EW:
            ok = logic is Logic.PBOTW and crack(a, b) == val
        else:
            ok = False
        if not ok:
            return False
        values.append(val)
    return True
