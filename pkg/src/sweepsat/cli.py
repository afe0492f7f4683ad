"""Command-line front end.

Exit codes follow solver conventions: 10 satisfiable, 20 unsatisfiable,
30 undecided (budget), 0 success for non-solving commands, 1 for usage,
parse, or internal errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional

from .cases import format_suite_report, run_case_suite
from .core import CnfError, Formula
from .dimacs import format_product, parse_dimacs, write_dimacs
from .engine import format_trace, reduce_to_fixpoint
from .expand import expand, format_branch, format_value_line
from .gen import GenConfig, gen_complete_signs, gen_random
from .harness import build_corpus, format_report, run_differential, write_report
from .oracle import (
    SAT,
    TABLE_LIMIT,
    backtracking_solve,
    truth_table_solve,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 30


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; solvers reserve 1 for that."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_formula(path: str) -> Formula:
    with open(path) as fh:
        text = fh.read()
    formula, warnings = parse_dimacs(text)
    for warning in warnings:
        print(f"c warning: {warning}", file=sys.stderr)
    return formula


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--backend",
        choices=("sorted", "pairwise"),
        default="sorted",
        help="candidate discovery backend",
    )
    parser.add_argument(
        "--enable-r4",
        action="store_true",
        help="also shrink width-3 clauses against width-2 partners",
    )


def _write_trace(path: Optional[str], trace) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(format_trace(trace))


def cmd_solve(args) -> int:
    formula = _read_formula(args.file)
    form, trace = reduce_to_fixpoint(
        formula, backend=args.backend, enable_r4=args.enable_r4
    )
    _write_trace(args.trace, trace)
    print(
        f"c reduced sweeps={trace.sweeps} passes={trace.passes} "
        f"eliminations={trace.eliminations} status={form.status.value}"
    )
    if form.is_contradiction:
        print("c reason=reduction")
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    budget = args.budget if args.budget > 0 else None
    outcome = expand(form, limit=1, budget=budget)
    if outcome.assignments:
        model = outcome.assignments[0]
        if not _verified(formula, model):
            print("c internal error: model failed verification", file=sys.stderr)
            return EXIT_USAGE
        print("s SATISFIABLE")
        print(format_value_line(model))
        return EXIT_SAT
    if outcome.complete:
        print("c reason=exhaustion")
        print(f"c explored branches={outcome.branches_explored} reroutes={outcome.reroutes}")
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    print(f"c budget exhausted after {outcome.branches_explored} visits")
    print("s UNKNOWN")
    return EXIT_UNKNOWN


def _verified(formula: Formula, model) -> bool:
    from .core import evaluate

    return evaluate(formula, model)


def cmd_enumerate(args) -> int:
    formula = _read_formula(args.file)
    form, trace = reduce_to_fixpoint(
        formula, backend=args.backend, enable_r4=args.enable_r4
    )
    if form.is_contradiction:
        print("c reason=reduction")
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    budget = args.budget if args.budget > 0 else None
    outcome = expand(form, limit=args.limit, budget=budget)
    for i, (branch, model) in enumerate(
        zip(outcome.branches, outcome.assignments), start=1
    ):
        print(f"c {i} {format_branch(branch)}")
        print(format_value_line(model))
    print(
        f"c enumerated branches={len(outcome.branches)} "
        f"explored={outcome.branches_explored} reroutes={outcome.reroutes} "
        f"complete={'true' if outcome.complete else 'false'}"
    )
    if outcome.assignments:
        return EXIT_SAT
    if outcome.complete:
        print("c reason=exhaustion")
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    print("s UNKNOWN")
    return EXIT_UNKNOWN


def cmd_reduce(args) -> int:
    formula = _read_formula(args.file)
    form, trace = reduce_to_fixpoint(
        formula, backend=args.backend, enable_r4=args.enable_r4
    )
    _write_trace(args.trace, trace)
    print(
        f"c sweeps={trace.sweeps} passes={trace.passes} "
        f"eliminations={trace.eliminations} steps={len(trace.steps)}"
    )
    print(f"c status={form.status.value}")
    print(f"c product {format_product(form.formula)}")
    sys.stdout.write(write_dimacs(form.formula))
    return EXIT_OK


def cmd_oracle(args) -> int:
    formula = _read_formula(args.file)
    method = args.method
    if method == "auto":
        method = "table" if formula.n <= TABLE_LIMIT else "backtracking"
    if method == "table":
        result = truth_table_solve(formula)
        print(f"c oracle method=table models={result.model_count}")
    else:
        result = backtracking_solve(formula)
        print("c oracle method=backtracking")
    if result.verdict == SAT:
        print("s SATISFIABLE")
        print(format_value_line(result.witness))
        return EXIT_SAT
    print("s UNSATISFIABLE")
    return EXIT_UNSAT


def cmd_cases(args) -> int:
    suite = run_case_suite(enable_r4=args.enable_r4)
    sys.stdout.write(format_suite_report(suite))
    return EXIT_OK if suite.all_equalities_ok else EXIT_USAGE


def cmd_gen(args) -> int:
    if args.family == "complete-signs":
        formula = gen_complete_signs()
    else:
        if args.n is None:
            raise CnfError("--n is required for the random family")
        if args.m is None and args.ratio is None:
            raise CnfError("one of --m or --ratio is required")
        if args.m is not None:
            config = GenConfig(args.n, args.m, args.seed)
        else:
            config = GenConfig.from_ratio(args.n, args.ratio, args.seed)
        formula = gen_random(config)
    text = write_dimacs(formula)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_cells(n_list: str, ratios: str, count: int) -> list:
    ns = [int(tok) for tok in n_list.split(",") if tok]
    rs = [float(tok) for tok in ratios.split(",") if tok]
    return [(n, r, count) for n in ns for r in rs]


def cmd_harness(args) -> int:
    cells = _parse_cells(args.n_list, args.ratios, args.count)
    jobs = build_corpus(args.seed, cells)
    budget = args.budget if args.budget > 0 else None
    report = run_differential(
        jobs,
        base_seed=args.seed,
        backend=args.backend,
        enable_r4=args.enable_r4,
        budget=budget,
        workers=args.workers,
    )
    text = format_report(report)
    # stdout gets config + summary; the full record list goes to --out
    for line in text.splitlines():
        if line.startswith(("config", "summary")):
            print(line)
    if args.out:
        write_report(report, args.out)
    bugs = report.count("SolverBug")
    return EXIT_OK if bugs == 0 else EXIT_USAGE


def cmd_bench(args) -> int:
    if args.file:
        formula = _read_formula(args.file)
    else:
        if args.n is None or args.m is None:
            raise CnfError("bench needs either a file or --n and --m")
        formula = gen_random(GenConfig(args.n, args.m, args.seed))
    per_width = {1: 1, 2: 2, 3: 6}
    expected = sum(per_width[c.width] for c in formula.clauses)
    form, trace = reduce_to_fixpoint(
        formula, backend=args.backend, enable_r4=args.enable_r4
    )
    for i, stats in enumerate(trace.sweep_stats, start=1):
        if stats.backend == "sorted":
            r = stats.record_count
            bound = float(r) if r <= 1 else 2 * r * math.log2(r) + r
            ok = "true" if stats.comparisons <= bound else "false"
            extra = (
                f"records={r} comparisons={stats.comparisons} "
                f"bound={bound:.1f} comparisons_ok={ok}"
            )
            if i == 1:
                extra += f" expected_records={expected} records_ok=" + (
                    "true" if r == expected else "false"
                )
        else:
            extra = f"pairs={stats.pairs_tested}"
        print(
            f"sweep {i} backend={stats.backend} candidates={stats.candidates} "
            f"applied={stats.applied} eliminated={stats.eliminated} {extra}"
        )
    cap = 3 * formula.m
    print(
        f"bench m={formula.m} sweeps={trace.sweeps} passes={trace.passes} "
        f"eliminations={trace.eliminations} cap={cap} "
        f"eliminations_ok={'true' if trace.eliminations <= cap else 'false'} "
        f"cubic_reference={formula.m ** 3}"
    )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="sweepsat",
        description="Sort-and-sweep 3-CNF reduction, expansion search, and audit tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="reduce, then search for one model")
    p.add_argument("file")
    _add_engine_flags(p)
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="max branch visits, 0 = unlimited")
    p.add_argument("--trace", help="write the rewrite trace to this file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="list satisfying branches")
    p.add_argument("file")
    _add_engine_flags(p)
    p.add_argument("--limit", type=int, default=10, help="max branches to print")
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="max branch visits, 0 = unlimited")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reduce", help="run sweeps to fixpoint, print the result")
    p.add_argument("file")
    _add_engine_flags(p)
    p.add_argument("--trace", help="write the rewrite trace to this file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="exact solve by truth table or backtracking")
    p.add_argument("file")
    p.add_argument(
        "--method", choices=("auto", "table", "backtracking"), default="auto"
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cases", help="run the constraint-interaction case audit")
    p.add_argument("--enable-r4", action="store_true")
    p.set_defaults(func=cmd_cases)

    p = sub.add_parser("gen", help="emit a DIMACS instance")
    p.add_argument("--family", choices=("random", "complete-signs"), default="random")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--ratio", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("harness", help="differential audit over a random corpus")
    p.add_argument("--n-list", default="8,10,12", help="comma-separated n values")
    p.add_argument("--ratios", default="3.0,4.3,5.0")
    p.add_argument("--count", type=int, default=10, help="instances per (n, ratio) cell")
    p.add_argument("--seed", type=int, default=0)
    _add_engine_flags(p)
    p.add_argument("--budget", type=int, default=0, help="expansion visit budget, 0 = unlimited")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="directory for the full report and certificates")
    p.set_defaults(func=cmd_harness)

    p = sub.add_parser("bench", help="instrumentation against the stated bounds")
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    _add_engine_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CnfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
