"""Infon formulas: abstract syntax, concrete grammar, printer, sequents.

Surface syntax (ASCII, loosest to tightest binding)::

    infon := imp
    imp   := orp ('->' imp)?          right associative
    orp   := and ('|' and)*           left associative
    and   := atom ('&' atom)*         left associative
    atom  := 'top' | 'bot' | IDENT | '(' infon ')'

A sequent is ``A; B; C |- G`` (or ``|- G`` for an empty context).
``#`` starts a comment that runs to the end of the line.

Formula nodes are immutable and carry a precomputed structural hash, so
sets and dicts of formulas stay cheap even for large terms.  Every
traversal in this module is iterative; nesting depth is bounded only by
memory.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

__all__ = [
    "TOP", "BOT", "ATOM", "AND", "IMP", "ORP",
    "Infon", "Top", "Bot", "Atom", "And", "Imp", "OrP",
    "Logic", "Sequent", "ParseError", "ConnectiveError",
    "parse_infon", "parse_sequent", "parse_sequent_file",
    "print_infon", "print_sequent", "subformulas", "postorder",
    "node_count", "atoms_of", "check_connectives", "tokenize",
]

# node kinds, shared with the parse DAG
TOP, BOT, ATOM, AND, IMP, ORP = range(6)

RESERVED = frozenset({"top", "bot"})
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Infon:
    """Base class of formula nodes.  Use the concrete subclasses."""

    __slots__ = ("_hash",)
    kind: int = -1

    def __hash__(self) -> int:
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {print_infon(self)}>"

    def __str__(self) -> str:
        return print_infon(self)


class Top(Infon):
    __slots__ = ()
    kind = TOP

    def __init__(self) -> None:
        object.__setattr__(self, "_hash", hash("top"))

    def __eq__(self, other):
        return type(other) is Top

    __hash__ = Infon.__hash__

    def __reduce__(self):
        return (Top, ())


class Bot(Infon):
    __slots__ = ()
    kind = BOT

    def __init__(self) -> None:
        object.__setattr__(self, "_hash", hash("bot"))

    def __eq__(self, other):
        return type(other) is Bot

    __hash__ = Infon.__hash__

    def __reduce__(self):
        return (Bot, ())


class Atom(Infon):
    __slots__ = ("name",)
    kind = ATOM
    __match_args__ = ("name",)

    def __init__(self, name: str) -> None:
        if not _IDENT.match(name) or name in RESERVED:
            raise ValueError(f"invalid atom name {name!r}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("atom", name)))

    def __eq__(self, other):
        return type(other) is Atom and other.name == self.name

    __hash__ = Infon.__hash__

    def __reduce__(self):
        return (Atom, (self.name,))


class _Binary(Infon):
    __slots__ = ("left", "right")
    _tag = ""

    def __init__(self, left: Infon, right: Infon) -> None:
        if not isinstance(left, Infon) or not isinstance(right, Infon):
            raise TypeError("operands must be Infon instances")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "_hash", hash((self._tag, left._hash, right._hash)))

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self) or other._hash != self._hash:
            return False
        # iterative to survive very deep terms
        stack = [(self.left, other.left), (self.right, other.right)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(a) is not type(b) or a._hash != b._hash:
                return False
            if isinstance(a, _Binary):
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
            elif a != b:
                return False
        return True

    __hash__ = Infon.__hash__

    def __reduce__(self):
        return (type(self), (self.left, self.right))


class And(_Binary):
    __slots__ = ()
    kind = AND
    _tag = "and"
    __match_args__ = ("left", "right")


class Imp(_Binary):
    __slots__ = ()
    kind = IMP
    _tag = "imp"
    __match_args__ = ("premise", "conclusion")

    @property
    def premise(self) -> Infon:
        return self.left

    @property
    def conclusion(self) -> Infon:
        return self.right


class OrP(_Binary):
    """Primal disjunction: introduction rules only."""

    __slots__ = ()
    kind = ORP
    _tag = "orp"
    __match_args__ = ("left", "right")


class Logic(str, Enum):
    P = "p"
    PBOT = "pbot"
    PBOTW = "pbotw"
    PVEEP = "pveep"

    @property
    def allows_orp(self) -> bool:
        return self is Logic.PVEEP

    def __str__(self) -> str:
        return self.value


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset into the UTF-8 source."""

    def __init__(self, message: str, text: str = "", pos: int = 0) -> None:
        self.offset = len(text[:pos].encode("utf-8"))
        super().__init__(f"{message} at byte {self.offset}")


class ConnectiveError(ValueError):
    """A formula uses a connective the chosen logic does not have."""


def postorder(roots: Iterable[Infon]) -> Iterator[Infon]:
    """Yield every node reachable from ``roots`` after its children.

    Physically shared nodes are yielded once; structurally equal but
    distinct objects are yielded separately.
    """
    seen: set[int] = set()
    for root in roots:
        if id(root) in seen:
            continue
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                yield node
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            if isinstance(node, _Binary):
                if id(node.right) not in seen:
                    stack.append((node.right, False))
                if id(node.left) not in seen:
                    stack.append((node.left, False))


def node_count(phi: Infon) -> int:
    """Number of nodes of ``phi`` as a tree (shared subterms counted per use)."""
    sizes: dict[int, int] = {}
    for node in postorder([phi]):
        if isinstance(node, _Binary):
            sizes[id(node)] = 1 + sizes[id(node.left)] + sizes[id(node.right)]
        else:
            sizes[id(node)] = 1
    return sizes[id(phi)]


def atoms_of(formulas: Iterable[Infon]) -> list[str]:
    """Atom names in first-occurrence order (left to right, premise first)."""
    names: dict[str, None] = {}
    for phi in formulas:
        stack = [phi]
        while stack:
            node = stack.pop()
            if isinstance(node, _Binary):
                stack.append(node.right)
                stack.append(node.left)
            elif type(node) is Atom:
                names.setdefault(node.name, None)
    return list(names)


# -- lexer -----------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)"
    r"|(?P<op>->|\|-|[&|();])"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
)


def tokenize(text: str) -> list[tuple[str, int]]:
    """Split ``text`` into ``(token, position)`` pairs.

    Identifiers and keywords come back verbatim; whitespace and comments
    are dropped.
    """
    out = []
    pos = 0
    n = len(text)
    match = _TOKEN.match
    while pos < n:
        m = match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            out.append((m.group(), pos))
        pos = m.end()
    return out


_ALL_VALID = re.compile(r"(?:\s+|\#[^\n]*|->|\|-|[&|();]|[A-Za-z_][A-Za-z0-9_]*)*\Z")
# two-letter operators become one control character each, so the lexer
# hands back CPython's cached one-character strings instead of new objects
_IMP, _TURNSTILE = "\x01", "\x02"
_FIND = re.compile(r"\#[^\n]*|([\x01\x02&|();]|[A-Za-z_][A-Za-z0-9_]*)")
_SHOW = {_IMP: "->", _TURNSTILE: "|-"}


def _lex(text: str) -> list[str]:
    # fast path without positions; tokenize() reports the bad character
    if not _ALL_VALID.match(text):
        tokenize(text)
    text = text.replace("->", _IMP).replace("|-", _TURNSTILE)
    return [t for t in _FIND.findall(text) if t]


def _show(tok: str) -> str:
    return repr(_SHOW.get(tok, tok))


# -- parser ----------------------------------------------------------------

# binding strength and associativity of the binary connectives
_BINARY = {_IMP: (1, Imp, False), "|": (2, OrP, True), "&": (3, And, True)}
_STOP = {";", _TURNSTILE}
_NOT_OPERAND = {";", _TURNSTILE, _IMP, "|", "&", ")"}


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _lex(text)
        self.i = 0
        self.top = Top()
        self.bot = Bot()
        self.atoms: dict[str, Atom] = {}

    def error(self, message: str, i: int | None = None):
        i = self.i if i is None else i
        located = tokenize(self.text)
        pos = located[i][1] if i < len(located) else len(self.text)
        return ParseError(message, self.text, pos)

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def infon(self) -> Infon:
        # operator-precedence parsing with explicit stacks, no recursion
        operands: list[Infon] = []
        ops: list[str] = []  # binary operators and "("
        opens: list[int] = []  # token index of each pending "("
        tokens = self.tokens
        n = len(tokens)
        atoms = self.atoms
        push, pop = operands.append, operands.pop

        def reduce() -> None:
            op = ops.pop()
            right = pop()
            push(_BINARY[op][1](pop(), right))

        i = self.i
        while True:
            # operand position
            tok = tokens[i] if i < n else None
            if tok is None or tok in _NOT_OPERAND:
                what = "end of input" if tok is None else _show(tok)
                self.i = i
                raise self.error(f"expected a formula, found {what}")
            if tok == "(":
                ops.append("(")
                opens.append(i)
                i += 1
                continue
            if tok == "top":
                push(self.top)
            elif tok == "bot":
                push(self.bot)
            else:
                atom = atoms.get(tok)
                if atom is None:
                    atom = atoms[tok] = Atom(tok)
                push(atom)
            i += 1
            # operator position: close parens, then a binary operator or the end
            while True:
                tok = tokens[i] if i < n else None
                if tok != ")":
                    break
                while ops and ops[-1] != "(":
                    reduce()
                if not ops:
                    self.i = i
                    raise self.error("unmatched ')'")
                ops.pop()
                opens.pop()
                i += 1
            entry = _BINARY.get(tok)
            if entry is None:
                if tok is None or tok in _STOP:
                    break
                self.i = i
                raise self.error(f"unexpected {_show(tok)}")
            prec, _, left_assoc = entry
            while ops and ops[-1] != "(":
                top_prec = _BINARY[ops[-1]][0]
                if top_prec > prec or (top_prec == prec and left_assoc):
                    reduce()
                else:
                    break
            ops.append(tok)
            i += 1
        self.i = i
        while ops:
            if ops[-1] == "(":
                raise self.error("unclosed '('", opens[-1])
            reduce()
        return operands[0]


def parse_infon(text: str) -> Infon:
    p = _Parser(text)
    phi = p.infon()
    if p.peek() is not None:
        raise p.error(f"unexpected {_show(p.peek())} after formula")
    return phi


def parse_sequent(text: str, logic: Logic | str = Logic.P) -> Sequent:
    logic = Logic(logic)
    p = _Parser(text)
    context: list[Infon] = []
    if p.peek() != _TURNSTILE:
        context.append(p.infon())
        while p.peek() == ";":
            p.i += 1
            context.append(p.infon())
    if p.peek() != _TURNSTILE:
        raise p.error("expected '|-'")
    p.i += 1
    goal = p.infon()
    if p.peek() is not None:
        raise p.error(f"unexpected {_show(p.peek())} after goal")
    s = Sequent(tuple(context), goal, logic)
    if "|" in p.tokens:  # only disjunctions can violate the connective set
        check_connectives(s, logic)
    return s


def parse_sequent_file(text: str, logic: Logic | str = Logic.P) -> list[Sequent]:
    """One sequent per non-blank, non-comment line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            out.append(parse_sequent(body, logic))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return out


# -- printer ---------------------------------------------------------------

_SYMBOL = {AND: " & ", IMP: " -> ", ORP: " | "}
_PREC = {IMP: 1, ORP: 2, AND: 3}


def print_infon(phi: Infon) -> str:
    """Canonical text with the fewest parentheses the grammar allows."""
    out: list[str] = []
    stack: list = [phi]  # nodes still to print, or literal pieces
    while stack:
        node = stack.pop()
        if type(node) is str:
            out.append(node)
            continue
        k = node.kind
        if k == TOP:
            out.append("top")
        elif k == BOT:
            out.append("bot")
        elif k == ATOM:
            out.append(node.name)
        else:
            prec = _PREC[k]
            left, right = node.left, node.right
            lprec = _PREC.get(left.kind, 4)
            rprec = _PREC.get(right.kind, 4)
            # "->" groups to the right, "&" and "|" to the left
            lparen = lprec < prec or (lprec == prec and k == IMP)
            rparen = rprec < prec or (rprec == prec and k != IMP)
            if rparen:
                stack += [")", right, "("]
            else:
                stack.append(right)
            stack.append(_SYMBOL[k])
            if lparen:
                stack += [")", left, "("]
            else:
                stack.append(left)
    return "".join(out)


# -- sequents --------------------------------------------------------------

@dataclass(frozen=True)
class Sequent:
    """``context |- goal``.  The context keeps first-occurrence order but
    duplicates are dropped on construction; only membership matters."""

    context: tuple[Infon, ...]
    goal: Infon
    logic: Logic = Logic.P

    def __post_init__(self) -> None:
        object.__setattr__(self, "context", tuple(dict.fromkeys(self.context)))
        object.__setattr__(self, "logic", Logic(self.logic))

    def __str__(self) -> str:
        return print_sequent(self)

    def with_logic(self, logic: Logic | str) -> Sequent:
        return Sequent(self.context, self.goal, Logic(logic))


def print_sequent(s: Sequent) -> str:
    ctx = "; ".join(print_infon(phi) for phi in s.context)
    return f"{ctx} |- {print_infon(s.goal)}" if ctx else f"|- {print_infon(s.goal)}"


def check_connectives(s: Sequent, logic: Logic | str) -> None:
    """Raise ConnectiveError if ``s`` uses primal disjunction outside P[\\/p]."""
    if Logic(logic).allows_orp:
        return
    for node in postorder([*s.context, s.goal]):
        if node.kind == ORP:
            raise ConnectiveError(
                f"primal disjunction is not a connective of logic {Logic(logic).value}: "
                f"{print_infon(node)}"
            )


def subformulas(s: Sequent) -> set[Infon]:
    """All subformulas of the sequent plus ``top`` (and ``bot`` unless in P)."""
    out: set[Infon] = {Top()}
    if s.logic is not Logic.P:
        out.add(Bot())
    stack = [*s.context, s.goal]
    while stack:
        node = stack.pop()
        if node in out:
            continue
        out.add(node)
        if isinstance(node, _Binary):
            stack.append(node.left)
            stack.append(node.right)
    return out
