"""Command-line front end.

Subcommands: eval, equiv, solve, decide-min, minimize, gen.  Witness automata
and generated instances are written to stdout as documents; diagnostics and
cost predictions go to stderr.  Exit codes: 0 when a command reaches a
verdict (either way), 2 for input or usage problems, 3 when an enumeration
budget is exceeded.  The FUZZMIN_BUDGET environment variable replaces every
default ceiling; per-run --budget-* flags take precedence over it.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .automaton import (
    DEFAULT_VECTOR_BUDGET,
    bounded_counterexample,
    equivalence_length_bound,
    equivalent_fixpoint,
    language_value,
)
from .equations import DEFAULT_SOLUTION_CAP, rhs_values, solve_intervals, solve_points
from .errors import BudgetExceededError, SizeExceededError
from .formats import parse_automaton, parse_system, render_automaton
from .generate import gen_automaton_document, gen_system_document
from .minimization import (
    DEFAULT_CANDIDATE_BUDGET,
    MinimizeInstance,
    cost_estimate,
    decide_k,
)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _budget(flag_value: int | None, default: int) -> int:
    if flag_value is not None:
        if flag_value < 1:
            raise ValueError("budgets must be positive")
        return flag_value
    raw = os.environ.get("FUZZMIN_BUDGET")
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(
                f"FUZZMIN_BUDGET must be an integer, got {raw!r}"
            ) from None
        if value < 1:
            raise ValueError("FUZZMIN_BUDGET must be positive")
        return value
    return default


def _cost_line(inst: MinimizeInstance) -> str:
    est = cost_estimate(inst)
    eqs = "n/a" if est.equation_count is None else str(est.equation_count)
    ops = "n/a" if est.predicted_ops is None else str(est.predicted_ops)
    return (
        f"cost k={inst.k}: candidates={est.candidate_count} "
        f"word_bound={est.word_bound} equations={eqs} predicted_ops={ops}"
    )


def _cmd_eval(args: argparse.Namespace) -> int:
    a = parse_automaton(_read(args.file))
    word = a.word_from_names(args.word.split())
    print(language_value(a, word).label)
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    a1 = parse_automaton(_read(args.file1))
    a2 = parse_automaton(_read(args.file2))
    budget = _budget(args.budget_phi, DEFAULT_VECTOR_BUDGET)
    if args.oracle_bound:
        bound = equivalence_length_bound(a1, a2)
        cex = bounded_counterexample(a1, a2, bound, max_pairs=budget)
        if cex is None:
            print(f"equivalent (up to length {bound})")
            return 0
    else:
        result = equivalent_fixpoint(a1, a2, max_vectors=budget)
        if result.equivalent:
            print(f"equivalent (stabilized at l={result.stabilization_index})")
            return 0
        cex = result.counterexample
    assert cex is not None
    print(f"not equivalent (counterexample: {a1.format_word(cex)})")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    system = parse_system(_read(args.file))
    if args.mode == "points":
        grid = len(rhs_values(system)) ** system.n_vars
        budget = _budget(args.budget_candidates, DEFAULT_CANDIDATE_BUDGET)
        if grid > budget:
            raise BudgetExceededError(grid, budget, "point-search grid")
        witness = solve_points(system)
        print("unsolvable" if witness is None else " ".join(witness.labels()))
        return 0
    cap = _budget(args.budget_phi, DEFAULT_SOLUTION_CAP)
    vectors = solve_intervals(system, max_vectors=cap).nonempty_vectors()
    if not vectors:
        print("unsolvable")
    for vec in vectors:
        print(vec)
    return 0


def _cmd_decide_min(args: argparse.Namespace) -> int:
    a = parse_automaton(_read(args.file))
    inst = MinimizeInstance(a, args.k)
    print(_cost_line(inst), file=sys.stderr)
    witness = decide_k(
        inst,
        max_candidates=_budget(args.budget_candidates, DEFAULT_CANDIDATE_BUDGET),
        max_vectors=_budget(args.budget_phi, DEFAULT_VECTOR_BUDGET),
    )
    if witness is None:
        print("empty")
    else:
        sys.stdout.write(render_automaton(witness.automaton))
    return 0


def _cmd_minimize(args: argparse.Namespace) -> int:
    a = parse_automaton(_read(args.file))
    max_candidates = _budget(args.budget_candidates, DEFAULT_CANDIDATE_BUDGET)
    max_vectors = _budget(args.budget_phi, DEFAULT_VECTOR_BUDGET)
    for k in range(1, a.n):
        inst = MinimizeInstance(a, k)
        print(_cost_line(inst), file=sys.stderr)
        witness = decide_k(
            inst, max_candidates=max_candidates, max_vectors=max_vectors
        )
        if witness is not None:
            sys.stdout.write(render_automaton(witness.automaton))
            return 0
    sys.stdout.write(render_automaton(a))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.shape == "automaton":
        text = gen_automaton_document(
            args.seed, args.states, args.symbols, args.chain_size
        )
    else:
        text = gen_system_document(
            args.seed, args.vars, args.equations, args.max_monomials, args.chain_size
        )
    sys.stdout.write(text)
    return 0


def _budget_flags(p: argparse.ArgumentParser, *, candidates: bool = False) -> None:
    if candidates:
        p.add_argument(
            "--budget-candidates",
            type=int,
            metavar="N",
            help="max enumerated candidate assignments",
        )
    p.add_argument(
        "--budget-phi",
        type=int,
        metavar="N",
        help="max stored vectors (fixpoint states, matrix pairs, interval solutions)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzmin",
        description="Equivalence, equation solving, and exact state "
        "minimization for fuzzy automata over finite chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="value of a word under an automaton")
    p.add_argument("file")
    p.add_argument(
        "word", help="whitespace-separated symbol names; '' is the empty word"
    )
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("equiv", help="decide language equality of two automata")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument(
        "--oracle-bound",
        action="store_true",
        help="use the bounded word check at its conclusive length "
        "instead of the fixpoint",
    )
    _budget_flags(p)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("solve", help="solve a system of fuzzy polynomial equations")
    p.add_argument("file")
    p.add_argument("--mode", choices=("intervals", "points"), default="intervals")
    _budget_flags(p, candidates=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decide-min", help="find a k-state equivalent or report empty")
    p.add_argument("file")
    p.add_argument("k", type=int)
    _budget_flags(p, candidates=True)
    p.set_defaults(func=_cmd_decide_min)

    p = sub.add_parser("minimize", help="smallest equivalent automaton")
    p.add_argument("file")
    _budget_flags(p, candidates=True)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("gen", help="generate a random instance document")
    shape = p.add_subparsers(dest="shape", required=True)
    pa = shape.add_parser("automaton")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--states", type=int, default=2)
    pa.add_argument("--symbols", type=int, default=2)
    pa.add_argument("--chain-size", type=int, default=3)
    pa.set_defaults(func=_cmd_gen)
    ps = shape.add_parser("system")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--vars", type=int, default=3)
    ps.add_argument("--equations", type=int, default=2)
    ps.add_argument("--max-monomials", type=int, default=2)
    ps.add_argument("--chain-size", type=int, default=3)
    ps.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, SizeExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
