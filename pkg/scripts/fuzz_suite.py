"""Differential sweep over a generated suite: engine, oracle, string model
and (for P[bot_w]) the * translation.  Prints a per-logic summary and the
first disagreement of each kind.

    python scripts/fuzz_suite.py --exhaustive 50000 --samples 100000
"""
from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from primal.algebra import check_model
from primal.engine import decide
from primal.oracle import SuiteSpec, enumerate_sequents, oracle_decide
from primal.reduction import translate_sequent
from primal.syntax import Logic


@dataclass
class FuzzConfig:
    atoms: int = 2
    max_nodes: int = 7
    max_context: int = 2
    exhaustive: int = 50_000
    samples: int = 100_000
    seed: int = SuiteSpec.seed
    model: bool = True

    def spec(self) -> SuiteSpec:
        return SuiteSpec(self.atoms, self.max_nodes, self.max_context,
                         self.exhaustive, self.samples, self.seed)


def sweep(cfg: FuzzConfig, logic: Logic) -> tuple[Counter, dict]:
    tally: Counter = Counter()
    first: dict = {}
    for s in enumerate_sequents(cfg.spec(), logic):
        tally["sequents"] += 1
        got = decide(logic, s).derivable
        tally["derivable"] += got
        checks = {"oracle": oracle_decide(logic, s)}
        if cfg.model:
            checks["model"] = check_model(logic, s)
        if logic is Logic.PBOTW:
            checks["reduction"] = decide(Logic.PVEEP, translate_sequent(s)).derivable
        for name, want in checks.items():
            if want != got:
                tally[name + "_mismatch"] += 1
                first.setdefault(name, s)
    return tally, first


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, default in vars(FuzzConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--no-{f}", dest=f, action="store_false")
        else:
            ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=default)
    cfg = FuzzConfig(**vars(ap.parse_args()))
    for logic in Logic:
        t0 = time.perf_counter()
        tally, first = sweep(cfg, logic)
        print(f"{logic.value:6} {dict(tally)}  ({time.perf_counter() - t0:.1f}s)")
        for name, s in first.items():
            print(f"    first {name} mismatch: {s}")


if __name__ == "__main__":
    main()
