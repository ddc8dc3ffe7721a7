"""Translations between the logics.

``translate_star`` embeds P[bot_w] into P[\\/p]: every implication gets the
group key ``bot | premise`` so that holding bot opens any ciphertext, as
the universal key does.  The output shares the translated subterms of the
input, so its DAG stays linear in the input.

``expand_group_keys`` removes group keys in favour of one ciphertext per
member key, turning ``(a | b) -> c`` into ``(a -> c) & (b -> c)``.  The
tree size can grow exponentially with nested keys; a node budget guards
against runaway expansion.
"""
from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    AND, ATOM, BOT, IMP, ORP, TOP,
    And, Bot, ConnectiveError, Imp, Infon, Logic, OrP, Sequent,
    node_count, postorder, print_infon,
)

__all__ = [
    "TranslationStats", "ExpansionTooLarge", "translate_star", "translate_sequent",
    "translation_stats", "expand_group_keys", "expand_sequent", "residual_disjunctions",
    "DEFAULT_MAX_NODES",
]

DEFAULT_MAX_NODES = 10**6


@dataclass(frozen=True)
class TranslationStats:
    input_nodes: int
    output_nodes: int


class ExpansionTooLarge(ValueError):
    pass


def translate_star(phi: Infon) -> Infon:
    bot = Bot()
    out: dict[int, Infon] = {}
    for node in postorder([phi]):
        k = node.kind
        if k == ORP:
            raise ConnectiveError(f"input already contains primal disjunction: {print_infon(node)}")
        if k == AND:
            out[id(node)] = And(out[id(node.left)], out[id(node.right)])
        elif k == IMP:
            out[id(node)] = Imp(OrP(bot, out[id(node.left)]), out[id(node.right)])
        else:
            out[id(node)] = node
    return out[id(phi)]


def translation_stats(phi: Infon, phi_star: Infon | None = None) -> TranslationStats:
    if phi_star is None:
        phi_star = translate_star(phi)
    return TranslationStats(node_count(phi), node_count(phi_star))


def translate_sequent(s: Sequent) -> Sequent:
    """Pointwise translation; the result is a P[\\/p] sequent."""
    return Sequent(
        tuple(translate_star(phi) for phi in s.context),
        translate_star(s.goal),
        Logic.PVEEP,
    )


def _distribute(premise: Infon, conclusion: Infon) -> Infon:
    # one implication per leaf of the disjunction tree, same bracketing
    built: dict[int, Infon] = {}
    stack = [(premise, False)]
    while stack:
        node, ready = stack.pop()
        if node.kind != ORP:
            built[id(node)] = Imp(node, conclusion)
        elif ready:
            built[id(node)] = And(built[id(node.left)], built[id(node.right)])
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return built[id(premise)]


def expand_group_keys(phi: Infon, max_nodes: int = DEFAULT_MAX_NODES) -> Infon:
    """Rewrite every ``(a | b) -> c``, innermost first, into
    ``(a -> c) & (b -> c)``.

    Primal disjunctions outside implication premises stay where they are
    (see :func:`residual_disjunctions`).  Raises ExpansionTooLarge when the
    result would have more than ``max_nodes`` nodes as a tree.
    """
    out: dict[int, Infon] = {}
    for node in postorder([phi]):
        k = node.kind
        if k in (ATOM, TOP, BOT):
            out[id(node)] = node
            continue
        a, b = out[id(node.left)], out[id(node.right)]
        if k == AND:
            out[id(node)] = And(a, b)
        elif k == ORP:
            out[id(node)] = OrP(a, b)
        elif a.kind == ORP:
            out[id(node)] = _distribute(a, b)
        else:
            out[id(node)] = Imp(a, b)
    result = out[id(phi)]
    size = node_count(result)
    if size > max_nodes:
        raise ExpansionTooLarge(f"group-key expansion needs {size} nodes (limit {max_nodes})")
    return result


def expand_sequent(s: Sequent, max_nodes: int = DEFAULT_MAX_NODES) -> Sequent:
    """Pointwise group-key expansion; the result is meant for logic P."""
    return Sequent(
        tuple(expand_group_keys(phi, max_nodes) for phi in s.context),
        expand_group_keys(s.goal, max_nodes),
        Logic.P,
    )


def residual_disjunctions(phi: Infon) -> list[Infon]:
    """Distinct primal disjunctions still present in ``phi``."""
    return list(dict.fromkeys(node for node in postorder([phi]) if node.kind == ORP))
