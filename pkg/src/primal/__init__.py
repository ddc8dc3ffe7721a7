"""Primal infon logics: parsing, linear-time deciders with proofs, the
reduction through primal disjunction, and a string model of the algebra."""
from .algebra import (
    Evaluation, check_model, crack, dec, enc, evaluate, gr, l, pi, r,
    relevant_closure, replay_derivation,
)
from .dag import ParseDag, atplus_classes, atplus_subset, build_dag
from .engine import (
    Rule, Step, Verdict, check_derivation, decide, decide_dag, derivation_error,
    format_derivation,
)
from .oracle import SuiteSpec, enumerate_sequents, oracle_decide
from .reduction import (
    ExpansionTooLarge, expand_group_keys, expand_sequent, translate_sequent, translate_star,
)
from .syntax import (
    And, Atom, Bot, ConnectiveError, Imp, Infon, Logic, OrP, ParseError, Sequent, Top,
    parse_infon, parse_sequent, parse_sequent_file, print_infon, print_sequent, subformulas,
)

__version__ = "0.1.0"

__all__ = [
    "And", "Atom", "Bot", "ConnectiveError", "Imp", "Infon", "Logic", "OrP", "ParseError",
    "Sequent", "Top", "parse_infon", "parse_sequent", "parse_sequent_file", "print_infon",
    "print_sequent", "subformulas",
    "ParseDag", "atplus_classes", "atplus_subset", "build_dag",
    "Rule", "Step", "Verdict", "check_derivation", "decide", "decide_dag",
    "derivation_error", "format_derivation",
    "ExpansionTooLarge", "expand_group_keys", "expand_sequent", "translate_sequent",
    "translate_star",
    "Evaluation", "check_model", "crack", "dec", "enc", "evaluate", "gr", "l", "pi", "r",
    "relevant_closure", "replay_derivation",
    "SuiteSpec", "enumerate_sequents", "oracle_decide",
]
