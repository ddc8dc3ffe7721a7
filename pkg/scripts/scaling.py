"""Scaling experiment: run the bench ladder and write one JSON line per
row (plus the decade ratio) to stdout or a file.

    python scripts/scaling.py --sizes 10000 100000 1000000 --repeat 5 --out scaling.jsonl
"""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field

from primal.bench import FAMILIES, run_ladder


@dataclass
class ScalingConfig:
    families: list[str] = field(default_factory=lambda: list(FAMILIES))
    sizes: list[int] = field(default_factory=lambda: [10**4, 10**5, 10**6])
    repeat: int = 5
    out: str | None = None


def run(cfg: ScalingConfig) -> list[dict]:
    rows = run_ladder(tuple(cfg.families), tuple(cfg.sizes), cfg.repeat)
    records, prev = [], {}
    for row in rows:
        rec = asdict(row)
        rec["events_per_token"] = row.events_per_token
        rec["ratio"] = row.seconds / prev[row.family] if row.family in prev else None
        prev[row.family] = row.seconds
        records.append(rec)
    return records


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", nargs="+", choices=list(FAMILIES), default=list(FAMILIES))
    ap.add_argument("--sizes", nargs="+", type=int, default=[10**4, 10**5, 10**6])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--out")
    cfg = ScalingConfig(**vars(ap.parse_args()))
    lines = [json.dumps(rec) for rec in run(cfg)]
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))


if __name__ == "__main__":
    main()
