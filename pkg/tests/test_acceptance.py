"""Acceptance criteria, one test each.  Every test prints a single
``criterion N: PASS|FAIL ...`` line; the lines are repeated in the pytest
terminal summary.  Run directly with ``python tests/test_acceptance.py``.
"""
import random
from dataclasses import dataclass, field, replace

import pytest

from conftest import ACCEPTANCE_LINES
from primal.algebra import (
    FF, Evaluation, check_model, crack, dec, enc, evaluate, l, pi, r, random_term,
    replay_derivation,
)
from primal.bench import run_ladder
from primal.dag import atplus_subset, build_dag
from primal.engine import check_derivation, decide, decide_dag
from primal.oracle import SuiteSpec, enumerate_sequents, formulas_by_size, oracle_decide
from primal.reduction import translate_sequent
from primal.syntax import Bot, Logic, Sequent

SPEC = SuiteSpec()
SEED = 20_240_601
EVENTS_PER_TOKEN_LIMIT = 20
DECADE_RATIO_LIMIT = 13
METATHEORY_SAMPLES = 10_000
MUTATION_SAMPLES = 1_000


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@dataclass
class LogicSweep:
    logic: Logic
    sequents: list = field(default_factory=list)
    derivable: list = field(default_factory=list)
    proofs: dict = field(default_factory=dict)  # index -> derivation
    oracle_mismatch: list = field(default_factory=list)
    model_mismatch: list = field(default_factory=list)
    proof_failures: list = field(default_factory=list)
    replay_failures: list = field(default_factory=list)
    # P[bot_w] only
    reduction_mismatch: list = field(default_factory=list)
    lemma_violations: list = field(default_factory=list)
    hierarchy_violations: list = field(default_factory=list)


def _sweep(logic: Logic) -> LogicSweep:
    out = LogicSweep(logic)
    for i, s in enumerate(enumerate_sequents(SPEC, logic)):
        v = decide_dag(build_dag(s, logic), True)
        out.sequents.append(s)
        out.derivable.append(v.derivable)
        if v.derivable != oracle_decide(logic, s):
            out.oracle_mismatch.append(s)
        if v.derivable != check_model(logic, s):
            out.model_mismatch.append(s)
        if v.derivable:
            out.proofs[i] = v.derivation
            if not (check_derivation(logic, s, v.derivation) and v.derivation[-1].infon == s.goal):
                out.proof_failures.append(s)
            if not replay_derivation(v.derivation, Evaluation.for_sequent(s), logic):
                out.replay_failures.append(s)
        if logic is Logic.PBOTW:
            if decide(Logic.PVEEP, translate_sequent(s)).derivable != v.derivable:
                out.reduction_mismatch.append(s)
            in_p = decide(Logic.P, s.with_logic(Logic.P)).derivable
            bot_in_p = decide(Logic.P, Sequent(s.context, Bot())).derivable
            expected = atplus_subset(build_dag(s)) if bot_in_p else in_p
            if v.derivable != expected:
                out.lemma_violations.append(s)
            in_pbot = decide(Logic.PBOT, s.with_logic(Logic.PBOT)).derivable
            if (in_p and not v.derivable) or (v.derivable and not in_pbot):
                out.hierarchy_violations.append(s)
    return out


@pytest.fixture(scope="module")
def sweeps() -> dict:
    return {logic: _sweep(logic) for logic in Logic}


def _first(items) -> str:
    return f" first: {items[0]}" if items else ""


def test_criterion_1_oracle_equivalence(sweeps):
    counts = {lg.value: len(sw.sequents) for lg, sw in sweeps.items()}
    bad = [s for sw in sweeps.values() for s in sw.oracle_mismatch]
    report(1, not bad, f"decide = oracle over {counts}; mismatches={len(bad)}{_first(bad)}")


def test_criterion_2_reduction_theorem(sweeps):
    sw = sweeps[Logic.PBOTW]
    bad = sw.reduction_mismatch
    report(2, not bad, f"P[bot_w] vs translated P[\\/p] over {len(sw.sequents)} sequents; "
                       f"mismatches={len(bad)}{_first(bad)}")


def test_criterion_3_three_step_algorithm(sweeps):
    sw = sweeps[Logic.PBOTW]
    bad = sw.lemma_violations
    report(3, not bad, f"lemma checks over {len(sw.sequents)} sequents; violations={len(bad)}{_first(bad)}")


def test_criterion_4_model_equivalence(sweeps):
    model = [s for sw in sweeps.values() for s in sw.model_mismatch]
    replay = [s for sw in sweeps.values() for s in sw.replay_failures]
    proofs = sum(len(sw.proofs) for sw in sweeps.values())
    report(4, not model and not replay,
           f"check_model = decide: mismatches={len(model)}{_first(model)}; "
           f"replayed {proofs} derivations, failures={len(replay)}{_first(replay)}")


def test_criterion_5_algebra_equations():
    rng = random.Random(SEED)
    failures = 0
    n = 100_000
    for _ in range(n):
        x, y = random_term(rng), random_term(rng)
        if not (l(pi(x, y)) == x and r(pi(x, y)) == y and dec(x, enc(x, y)) == y
                and crack(FF, enc(x, y)) == y):
            failures += 1
    seen: dict = {}
    collisions = 0
    formulas = 0
    v = Evaluation(["p", "q"])
    for bucket in formulas_by_size(SPEC, Logic.PVEEP).values():
        for phi in bucket:
            formulas += 1
            if seen.setdefault(evaluate(v, phi), phi) != phi:
                collisions += 1
    report(5, failures == 0 and collisions == 0,
           f"{n} random term pairs, equation failures={failures}; "
           f"eval over {formulas} formulas, collisions={collisions}")


def test_criterion_6_linear_time():
    rows = run_ladder()
    worst_events = max(row.events_per_token for row in rows)
    ratios = {}
    for a, b in zip(rows, rows[1:]):
        if a.family == b.family:
            ratios.setdefault(a.family, []).append(round(b.seconds / a.seconds, 2))
    worst_ratio = max(x for rs in ratios.values() for x in rs)
    times = {row.family: [] for row in rows}
    for row in rows:
        times[row.family].append(round(row.seconds, 4))
    ok = worst_events <= EVENTS_PER_TOKEN_LIMIT and worst_ratio <= DECADE_RATIO_LIMIT
    report(6, ok, f"max events/token={worst_events:.2f} (limit {EVENTS_PER_TOKEN_LIMIT}); "
                  f"decade ratios={ratios} (limit {DECADE_RATIO_LIMIT}); seconds={times}")


def _metatheory(sweep: LogicSweep, rng: random.Random) -> tuple[int, int, int, int]:
    logic = sweep.logic
    seqs = sweep.sequents
    derivable_idx = [i for i, ok in enumerate(sweep.derivable) if ok]
    weak_bad = cut_bad = cut_used = 0
    for _ in range(METATHEORY_SAMPLES):
        s = seqs[derivable_idx[rng.randrange(len(derivable_idx))]]
        delta = seqs[rng.randrange(len(seqs))].context + (seqs[rng.randrange(len(seqs))].goal,)
        if not decide(logic, Sequent(s.context + delta, s.goal, logic)).derivable:
            weak_bad += 1
    for _ in range(METATHEORY_SAMPLES):
        # Gamma |- phi1 derivable; phi2 a goal from elsewhere in the suite
        s1 = seqs[derivable_idx[rng.randrange(len(derivable_idx))]]
        phi2 = seqs[rng.randrange(len(seqs))].goal
        if decide(logic, Sequent(s1.context + (s1.goal,), phi2, logic)).derivable:
            cut_used += 1
            if not decide(logic, Sequent(s1.context, phi2, logic)).derivable:
                cut_bad += 1
    return weak_bad, cut_bad, cut_used, METATHEORY_SAMPLES


def test_criterion_7_metatheory(sweeps):
    rng = random.Random(SEED)
    parts = []
    bad = 0
    for logic, sw in sweeps.items():
        weak_bad, cut_bad, cut_used, n = _metatheory(sw, rng)
        bad += weak_bad + cut_bad
        parts.append(f"{logic.value}: weakening {weak_bad}/{n}, cut {cut_bad}/{cut_used} premise-true")
    hier = sweeps[Logic.PBOTW].hierarchy_violations
    bad += len(hier)
    report(7, bad == 0, f"violations: {'; '.join(parts)}; hierarchy P=>P[bot_w]=>P[bot] over "
                        f"{len(sweeps[Logic.PBOTW].sequents)} sequents: {len(hier)}{_first(hier)}")


def test_criterion_8_proof_checking(sweeps):
    failures = [s for sw in sweeps.values() for s in sw.proof_failures]
    total = sum(len(sw.proofs) for sw in sweeps.values())
    rng = random.Random(SEED)
    accepted = 0
    mutated_total = 0
    for logic, sw in sweeps.items():
        candidates = [i for i, steps in sw.proofs.items() if any(st.premises for st in steps)]
        for i in rng.sample(candidates, MUTATION_SAMPLES):
            steps = sw.proofs[i]
            k = rng.choice([j for j, st in enumerate(steps) if st.premises])
            slot = rng.randrange(len(steps[k].premises))
            old = steps[k].premises[slot]
            new = rng.choice([x for x in range(-1, len(steps) + 1) if x != old])
            prem = list(steps[k].premises)
            prem[slot] = new
            mutated = steps[:k] + [replace(steps[k], premises=tuple(prem))] + steps[k + 1:]
            mutated_total += 1
            if check_derivation(logic, sw.sequents[i], mutated):
                accepted += 1
    report(8, not failures and accepted == 0,
           f"{total} derivations checked, rejected={len(failures)}{_first(failures)}; "
           f"{mutated_total} single-index mutations, accepted={accepted}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
