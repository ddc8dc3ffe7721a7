"""Growth of group-key expansion: nest n group keys
``(a1 | b1) -> (a2 | b2) -> ... -> z`` and report node counts before and
after expansion, next to the linear * translation of the P[bot_w] source
``a1 -> a2 -> ... -> z``.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from primal.reduction import ExpansionTooLarge, expand_group_keys, translation_stats
from primal.syntax import Atom, Imp, OrP, node_count


@dataclass
class GrowthConfig:
    max_depth: int = 16
    max_nodes: int = 10**6


def nested(depth: int, disjunctive: bool):
    phi = Atom("z")
    for i in reversed(range(depth)):
        prem = OrP(Atom(f"a{i}"), Atom(f"b{i}")) if disjunctive else Atom(f"a{i}")
        phi = Imp(prem, phi)
    return phi


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-depth", type=int, default=GrowthConfig.max_depth)
    ap.add_argument("--max-nodes", type=int, default=GrowthConfig.max_nodes)
    cfg = GrowthConfig(**vars(ap.parse_args()))
    print("depth  source  star  group-keys  expanded")
    for depth in range(1, cfg.max_depth + 1):
        stats = translation_stats(nested(depth, False))
        keyed = nested(depth, True)
        try:
            expanded = str(node_count(expand_group_keys(keyed, cfg.max_nodes)))
        except ExpansionTooLarge:
            expanded = f">{cfg.max_nodes}"
        print(f"{depth:5}  {stats.input_nodes:6}  {stats.output_nodes:4}  "
              f"{node_count(keyed):10}  {expanded:>8}")


if __name__ == "__main__":
    main()
