"""Command-line front end.

Exit codes: 0 derivable / success, 1 not derivable, 2 usage or parse
error, 3 cross-check failure (engine disagrees with oracle or model, or an
extracted derivation does not check).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from typing import Callable, Iterable

from .algebra import Evaluation, check_model, evaluate, replay_derivation
from .bench import FAMILIES, run_ladder
from .dag import build_dag
from .engine import check_derivation, decide_dag, derivation_records, format_derivation
from .oracle import SuiteSpec, enumerate_sequents, oracle_decide
from .reduction import DEFAULT_MAX_NODES, ExpansionTooLarge, expand_sequent, translate_sequent
from .syntax import (
    ConnectiveError, Logic, ParseError, Sequent,
    parse_infon, parse_sequent, parse_sequent_file, print_sequent,
)

EXIT_OK, EXIT_NOT_DERIVABLE, EXIT_USAGE, EXIT_CROSSCHECK = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _sequents(args, logic: Logic) -> list[tuple[str, Sequent]]:
    items: list[tuple[str, Sequent]] = []
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        items += zip([ln for ln in lines if ln], parse_sequent_file(text, logic))
    for text in args.sequent:
        items.append((text, parse_sequent(text, logic)))
    if not items:
        raise _Usage("no sequent given (pass one as an argument or use -f FILE)")
    return items


def _record(text: str, logic: Logic, s: Sequent, want_proof: bool, model: bool):
    """Decide one sequent; returns the report record, its exit status and
    the derivation steps."""
    t0 = time.perf_counter()
    d = build_dag(s, logic)
    verdict = decide_dag(d, want_proof)
    micros = int((time.perf_counter() - t0) * 1e6)
    status = EXIT_OK if verdict.derivable else EXIT_NOT_DERIVABLE
    steps = verdict.derivation or []
    if want_proof and verdict.derivable:
        ok = check_derivation(logic, s, steps)
        ok = ok and replay_derivation(steps, Evaluation.for_sequent(s), logic)
        if not ok:
            status = EXIT_CROSSCHECK
    rec = {
        "input": text,
        "logic": logic.value,
        "derivable": verdict.derivable,
        "events": verdict.events,
        "classes": verdict.classes,
        "micros": micros,
        "derivation": derivation_records(steps),
    }
    if model:
        rec["model_ok"] = check_model(logic, s) == verdict.derivable
        if not rec["model_ok"]:
            status = EXIT_CROSSCHECK
    return rec, status, steps


def _combine(statuses: Iterable[int]) -> int:
    statuses = list(statuses)
    if EXIT_CROSSCHECK in statuses:
        return EXIT_CROSSCHECK
    return EXIT_NOT_DERIVABLE if EXIT_NOT_DERIVABLE in statuses else EXIT_OK


def _decide_like(args, out, want_proof: bool, model: bool) -> int:
    logic = Logic(args.logic)
    statuses = []
    for text, s in _sequents(args, logic):
        rec, status, steps = _record(text, logic, s, want_proof, model)
        statuses.append(status)
        if args.format == "json":
            print(json.dumps(rec), file=out)
            continue
        verdict = "derivable" if rec["derivable"] else "not derivable"
        if model:
            verdict += "; model agrees" if rec["model_ok"] else "; MODEL DISAGREES"
        single = not args.file and len(args.sequent) == 1
        print(verdict if single else f"{text}: {verdict}", file=out)
        if want_proof and rec["derivable"]:
            if status == EXIT_CROSSCHECK:
                print("derivation failed its own check", file=out)
            else:
                print(format_derivation(steps), file=out)
    return _combine(statuses)


def cmd_decide(args, out) -> int:
    return _decide_like(args, out, args.proof, model=False)


def cmd_prove(args, out) -> int:
    return _decide_like(args, out, True, model=False)


def cmd_model_check(args, out) -> int:
    return _decide_like(args, out, args.proof, model=True)


def cmd_translate(args, out) -> int:
    if args.expand:
        for _, s in _sequents(args, Logic.PVEEP):
            print(print_sequent(expand_sequent(s, args.max_nodes)), file=out)
    else:
        for _, s in _sequents(args, Logic.PBOTW):
            print(print_sequent(translate_sequent(s)), file=out)
    return EXIT_OK


def cmd_eval(args, out) -> int:
    if not args.formula:
        raise _Usage("no formula given")
    v = Evaluation()
    for text in args.formula:
        print(evaluate(v, parse_infon(text)), file=out)
    return EXIT_OK


def cmd_fuzz(args, out) -> int:
    spec = SuiteSpec(
        atoms=args.atoms, max_nodes=args.nodes, max_context=args.context,
        exhaustive_cap=args.exhaustive, random_samples=args.samples, seed=args.seed,
    )
    logics = [Logic(args.logic)] if args.logic_given else list(Logic)
    status = EXIT_OK
    for logic in logics:
        checked = 0
        failure = None
        for s in enumerate_sequents(spec, logic):
            checked += 1
            got = decide_dag(build_dag(s, logic)).derivable
            want = oracle_decide(logic, s)
            if got != want:
                failure = f"engine={got} oracle={want}"
            elif logic is Logic.PBOTW:
                star = translate_sequent(s)
                if decide_dag(build_dag(star)).derivable != got:
                    failure = f"reduction: {logic.value}={got}, translated disagrees"
            if failure:
                print(f"{logic.value}: MISMATCH after {checked} sequents: {print_sequent(s)} ({failure})",
                      file=out)
                status = EXIT_CROSSCHECK
                break
        else:
            print(f"{logic.value}: {checked} sequents, 0 mismatches", file=out)
    return status


def cmd_bench(args, out) -> int:
    sizes = tuple(int(x) for x in args.sizes.split(","))
    rows = run_ladder(tuple(args.family or FAMILIES), sizes, args.repeat)
    prev = {}
    for row in rows:
        ratio = row.seconds / prev[row.family] if row.family in prev else None
        prev[row.family] = row.seconds
        if args.format == "json":
            rec = dataclasses.asdict(row)
            rec["events_per_token"] = row.events_per_token
            rec["ratio"] = ratio
            print(json.dumps(rec), file=out)
        else:
            shown = "-" if ratio is None else f"{ratio:.1f}"
            print(f"{row.family:6} tokens={row.tokens:>8} events/token={row.events_per_token:5.2f} "
                  f"seconds={row.seconds:8.4f} ratio={shown}", file=out)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--logic", choices=[lg.value for lg in Logic], default="p")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=SuiteSpec.seed)

    seq = argparse.ArgumentParser(add_help=False)
    seq.add_argument("sequent", nargs="*", help="sequent text, e.g. 'p; p -> q |- q'")
    seq.add_argument("-f", "--file", help="file with one sequent per line ('#' comments)")

    p = argparse.ArgumentParser(prog="primal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, parents, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("decide", cmd_decide, [common, seq], "decide derivability")
    sp.add_argument("--proof", action="store_true", help="also print a derivation")
    add("prove", cmd_prove, [common, seq], "decide and print a checked derivation")
    sp = add("model-check", cmd_model_check, [common, seq], "compare the string model with the decider")
    sp.add_argument("--proof", action="store_true")
    sp = add("translate", cmd_translate, [common, seq], "print the * translation")
    sp.add_argument("--expand", action="store_true", help="expand group keys of a P[\\/p] sequent instead")
    sp.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    sp = add("eval", cmd_eval, [common], "print the string value of formulas")
    sp.add_argument("formula", nargs="*")
    sp = add("fuzz", cmd_fuzz, [common], "engine vs oracle (and the reduction) over the suite")
    sp.add_argument("--atoms", type=int, default=SuiteSpec.atoms)
    sp.add_argument("--nodes", type=int, default=SuiteSpec.max_nodes)
    sp.add_argument("--context", type=int, default=SuiteSpec.max_context)
    sp.add_argument("--exhaustive", type=int, default=SuiteSpec.exhaustive_cap)
    sp.add_argument("--samples", type=int, default=SuiteSpec.random_samples)
    sp = add("bench", cmd_bench, [common], "size ladder: events per token and time ratios")
    sp.add_argument("--family", action="append", choices=list(FAMILIES))
    sp.add_argument("--sizes", default="10000,100000,1000000")
    sp.add_argument("--repeat", type=int, default=5)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else argv
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.logic_given = "--logic" in argv or any(a.startswith("--logic=") for a in argv)
    try:
        return args.fn(args, out)
    except (ParseError, ConnectiveError, ExpansionTooLarge, _Usage, OSError) as exc:
        print(f"primal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
