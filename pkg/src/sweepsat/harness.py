"""Differential audit: reduction + expansion versus the oracle, at scale.

Every instance runs through the full pipeline and an independent oracle,
then lands in exactly one class:

  AgreeSat        both sides satisfiable, model verified
  ReductionUnsat  sweeps derived the empty clause; oracle confirms UNSAT
  ClaimViolation  irreducible, search exhausted empty, oracle confirms
                  UNSAT: an unsatisfiable instance the sweeps did not spot
  SolverBug       any disagreement between pipeline and oracle
  Budget          expansion stopped at its visit budget, undecided

ClaimViolation is the interesting outcome: it is direct evidence against
the idea that sweeping alone spots every unsatisfiable formula.  Flagged
instances are stored as certificates (DIMACS + trace + irreducible form)
so the classification can be re-verified from disk.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Optional

from .core import Formula, evaluate
from .dimacs import parse_dimacs, write_dimacs
from .engine import format_trace, reduce_to_fixpoint
from .expand import SearchKind, expand
from .gen import GenConfig, gen_random, instance_seed
from .oracle import (
    SAT,
    TABLE_LIMIT,
    UNSAT,
    backtracking_solve,
    truth_table_solve,
)

AGREE_SAT = "AgreeSat"
REDUCTION_UNSAT = "ReductionUnsat"
CLAIM_VIOLATION = "ClaimViolation"
SOLVER_BUG = "SolverBug"
BUDGET = "Budget"

CLASSES = (AGREE_SAT, REDUCTION_UNSAT, CLAIM_VIOLATION, SOLVER_BUG, BUDGET)

# classes that ship a certificate directory when an output dir is given
CERTIFIED = (REDUCTION_UNSAT, CLAIM_VIOLATION, SOLVER_BUG)


@dataclass(frozen=True)
class InstanceRecord:
    index: int
    seed: int
    n: int
    m: int
    outcome: str
    detail: str
    sweeps: int
    passes: int
    eliminations: int
    records_ok: bool
    comparisons_ok: bool
    eliminations_ok: bool
    branches: int
    reroutes: int


@dataclass(frozen=True)
class Certificate:
    dirname: str
    files: dict[str, str]


@dataclass(frozen=True)
class HarnessReport:
    base_seed: int
    backend: str
    enable_r4: bool
    budget: Optional[int]
    records: tuple[InstanceRecord, ...]
    certificates: tuple[Certificate, ...]

    def count(self, outcome: str) -> int:
        return sum(1 for r in self.records if r.outcome == outcome)


def classify(
    oracle_verdict: str,
    reduction_contradiction: bool,
    search_kind: Optional[SearchKind],
    model_verified: Optional[bool],
) -> tuple[str, str]:
    """Pure classification; returns (class, detail)."""
    if reduction_contradiction:
        if oracle_verdict == UNSAT:
            return REDUCTION_UNSAT, "empty clause derived; oracle agrees"
        return SOLVER_BUG, "reduction derived the empty clause on a satisfiable instance"
    if search_kind is SearchKind.FOUND:
        if not model_verified:
            return SOLVER_BUG, "search reported a model that fails evaluation"
        if oracle_verdict == UNSAT:
            return SOLVER_BUG, "search found a verified model but oracle reports UNSAT"
        return AGREE_SAT, "model found and verified; oracle agrees"
    if search_kind is SearchKind.EXHAUSTED:
        if oracle_verdict == SAT:
            return SOLVER_BUG, "search exhausted all branches but oracle finds a model"
        return CLAIM_VIOLATION, "irreducible and exhausted, yet unsatisfiable"
    return BUDGET, "expansion stopped at its visit budget"


def solve_oracle(formula: Formula):
    if formula.n <= TABLE_LIMIT:
        return truth_table_solve(formula)
    return backtracking_solve(formula)


def _sweep_instrumentation(trace, formula: Formula) -> tuple[bool, bool, bool]:
    """Check record count, comparison bound, and the 3m elimination cap."""
    per_width = {1: 1, 2: 2, 3: 6}
    expected = sum(per_width[c.width] for c in formula.clauses)
    records_ok = True
    comparisons_ok = True
    for i, stats in enumerate(trace.sweep_stats):
        if stats.backend != "sorted":
            continue
        if i == 0 and stats.record_count != expected:
            records_ok = False
        r = stats.record_count
        bound = r if r <= 1 else 2 * r * math.log2(r) + r
        if stats.comparisons > bound:
            comparisons_ok = False
    eliminations_ok = trace.eliminations <= 3 * formula.m
    return records_ok, comparisons_ok, eliminations_ok


def run_one(
    formula: Formula,
    index: int = 0,
    seed: int = 0,
    backend: str = "sorted",
    enable_r4: bool = False,
    budget: Optional[int] = None,
) -> tuple[InstanceRecord, Optional[Certificate]]:
    """Pipeline one instance and classify it against the oracle."""
    form, trace = reduce_to_fixpoint(formula, backend=backend, enable_r4=enable_r4)
    oracle = solve_oracle(formula)

    search_kind = None
    model_verified = None
    branches = reroutes = 0
    outcome_search = None
    if not form.is_contradiction:
        outcome_search = expand(form, limit=1, budget=budget)
        search_kind = outcome_search.kind
        branches = outcome_search.branches_explored
        reroutes = outcome_search.reroutes
        if outcome_search.assignments:
            model_verified = evaluate(formula, outcome_search.assignments[0])

    klass, detail = classify(
        oracle.verdict, form.is_contradiction, search_kind, model_verified
    )
    records_ok, comparisons_ok, eliminations_ok = _sweep_instrumentation(
        trace, formula
    )
    record = InstanceRecord(
        index=index,
        seed=seed,
        n=formula.n,
        m=formula.m,
        outcome=klass,
        detail=detail,
        sweeps=trace.sweeps,
        passes=trace.passes,
        eliminations=trace.eliminations,
        records_ok=records_ok,
        comparisons_ok=comparisons_ok,
        eliminations_ok=eliminations_ok,
        branches=branches,
        reroutes=reroutes,
    )

    certificate = None
    if klass in CERTIFIED:
        search_line = (
            f"search kind={search_kind.value} branches={branches} "
            f"reroutes={reroutes}"
            if search_kind is not None
            else "search kind=skipped"
        )
        outcome_text = "\n".join(
            [
                f"class {klass}",
                f"detail {detail}",
                f"oracle verdict={oracle.verdict} models={oracle.model_count}",
                f"instance index={index} seed={seed} n={formula.n} m={formula.m}",
                f"settings backend={backend} r4={'on' if enable_r4 else 'off'} "
                f"budget={budget if budget is not None else 'none'}",
                f"reduction status={form.status.value} sweeps={trace.sweeps} "
                f"passes={trace.passes} eliminations={trace.eliminations}",
                search_line,
            ]
        )
        certificate = Certificate(
            dirname=f"instance_{index:05d}_{klass}",
            files={
                "instance.cnf": write_dimacs(formula),
                "trace.log": format_trace(trace),
                "irreducible.cnf": write_dimacs(form.formula),
                "outcome.txt": outcome_text + "\n",
            },
        )
    return record, certificate


def _worker(args) -> tuple[InstanceRecord, Optional[Certificate]]:
    index, config, backend, enable_r4, budget = args
    formula = gen_random(config)
    return run_one(
        formula,
        index=index,
        seed=config.seed,
        backend=backend,
        enable_r4=enable_r4,
        budget=budget,
    )


def build_corpus(
    base_seed: int, cells: list[tuple[int, float, int]]
) -> list[tuple[int, GenConfig]]:
    """cells = [(n, ratio, count)]; indexes and seeds are globally sequential."""
    jobs = []
    index = 0
    for n, ratio, count in cells:
        for _ in range(count):
            jobs.append(
                (index, GenConfig.from_ratio(n, ratio, instance_seed(base_seed, index)))
            )
            index += 1
    return jobs


def run_differential(
    jobs: list[tuple[int, GenConfig]],
    base_seed: int = 0,
    backend: str = "sorted",
    enable_r4: bool = False,
    budget: Optional[int] = None,
    workers: int = 1,
) -> HarnessReport:
    """Run the corpus; results are index-ordered regardless of worker count."""
    args = [(index, config, backend, enable_r4, budget) for index, config in jobs]
    if workers > 1:
        with Pool(workers) as pool:
            results = pool.map(_worker, args, chunksize=64)
    else:
        results = [_worker(a) for a in args]
    records = tuple(r for r, _ in results)
    certificates = tuple(c for _, c in results if c is not None)
    return HarnessReport(
        base_seed=base_seed,
        backend=backend,
        enable_r4=enable_r4,
        budget=budget,
        records=records,
        certificates=certificates,
    )


def format_report(report: HarnessReport) -> str:
    lines = [
        f"config instances={len(report.records)} seed={report.base_seed} "
        f"backend={report.backend} r4={'on' if report.enable_r4 else 'off'} "
        f"budget={report.budget if report.budget is not None else 'none'}"
    ]
    for r in report.records:
        lines.append(
            f"instance index={r.index} seed={r.seed} n={r.n} m={r.m} "
            f"class={r.outcome} sweeps={r.sweeps} passes={r.passes} "
            f"eliminations={r.eliminations} branches={r.branches} "
            f"reroutes={r.reroutes}"
        )
    counts = " ".join(f"{name}={report.count(name)}" for name in CLASSES)
    lines.append(f"summary total={len(report.records)} {counts}")
    max_sweeps = max((r.sweeps for r in report.records), default=0)
    over_three = sum(1 for r in report.records if r.sweeps > 3)
    lines.append(
        f"summary max_sweeps={max_sweeps} sweeps_over_three={over_three} "
        f"records_ok={_b(all(r.records_ok for r in report.records))} "
        f"comparisons_ok={_b(all(r.comparisons_ok for r in report.records))} "
        f"eliminations_ok={_b(all(r.eliminations_ok for r in report.records))}"
    )
    unsat_total = report.count(REDUCTION_UNSAT) + report.count(CLAIM_VIOLATION)
    lines.append(
        f"summary unsat_total={unsat_total} "
        f"spotted_by_reduction={report.count(REDUCTION_UNSAT)} "
        f"missed_by_reduction={report.count(CLAIM_VIOLATION)}"
    )
    return "\n".join(lines) + "\n"


def write_report(report: HarnessReport, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "report.txt"), "w") as fh:
        fh.write(format_report(report))
    for cert in report.certificates:
        cert_dir = os.path.join(out_dir, cert.dirname)
        os.makedirs(cert_dir, exist_ok=True)
        for name, text in cert.files.items():
            with open(os.path.join(cert_dir, name), "w") as fh:
                fh.write(text)


def reverify_certificate(cert_dir: str) -> bool:
    """Re-run the pipeline on a stored certificate; True if the class holds."""
    with open(os.path.join(cert_dir, "instance.cnf")) as fh:
        formula, _ = parse_dimacs(fh.read())
    with open(os.path.join(cert_dir, "outcome.txt")) as fh:
        lines = dict(
            line.split(" ", 1) for line in fh.read().splitlines() if " " in line
        )
    stored_class = lines["class"].strip()
    settings = dict(
        part.split("=", 1) for part in lines["settings"].split() if "=" in part
    )
    budget = None if settings["budget"] == "none" else int(settings["budget"])
    record, _ = run_one(
        formula,
        backend=settings["backend"],
        enable_r4=settings["r4"] == "on",
        budget=budget,
    )
    return record.outcome == stored_class


def _b(value: bool) -> str:
    return "true" if value else "false"
