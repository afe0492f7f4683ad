"""Sweep-based reduction to a fixpoint.

A sweep discovers every reduction opportunity in the current formula (via
the sorted-records scan or the all-pairs reference scan), then applies the
candidates in a fixed order, skipping any whose source clauses were
consumed by an earlier application.  Sweeps repeat until nothing fires or
the empty clause appears.  Each applied rewrite strictly removes literal
instances, so the whole run performs at most 3m eliminations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import count
from typing import Iterable, Optional

from .core import (
    DEDUP,
    R1_MERGE,
    SELF_SUBSUME,
    SUBSUME,
    TAUTOLOGY_DROP,
    UNIT_RESOLVE,
    Clause,
    CnfError,
    Formula,
    RewriteStep,
    complement,
)
from .permsort import (
    Candidate,
    SortStats,
    expand_permutations,
    pairwise_candidates,
    scan_adjacent,
    sort_records,
)

BACKENDS = ("sorted", "pairwise")


class RuleViolationError(CnfError):
    """A rewrite rule was applied to clauses that do not fit its shape."""


class ReductionStatus(Enum):
    IRREDUCIBLE = "irreducible"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class SweepStats:
    backend: str
    record_count: int = 0
    comparisons: int = 0
    pairs_tested: int = 0
    candidates: int = 0
    applied: int = 0
    eliminated: int = 0


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[RewriteStep, ...]
    sweeps: int
    passes: int
    eliminations: int
    sweep_stats: tuple[SweepStats, ...] = ()


@dataclass(frozen=True)
class IrreducibleForm:
    """Fixpoint of the sweep engine.

    units holds the literals of width-1 clauses; residual the wider
    clauses.  When status is CONTRADICTION the fields show the live state
    at the moment the empty clause appeared.
    """

    n: int
    units: frozenset[int]
    residual: tuple[Clause, ...]
    status: ReductionStatus
    formula: Formula

    @property
    def is_contradiction(self) -> bool:
        return self.status is ReductionStatus.CONTRADICTION


# ---------------------------------------------------------------- single rules

def apply_r1_merge(a: Clause, b: Clause) -> tuple[int, ...]:
    """(A+B+C).(A+B+!C) -> (A+B): equal width, one complemented position."""
    if a.width != b.width:
        raise RuleViolationError("merge needs equal widths")
    shared = set(a.literals) & set(b.literals)
    if len(shared) != a.width - 1:
        raise RuleViolationError("merge needs all but one literal shared")
    la = next(iter(set(a.literals) - shared))
    lb = next(iter(set(b.literals) - shared))
    if lb != complement(la):
        raise RuleViolationError("differing literals must be complementary")
    return tuple(sorted(shared))


def apply_subsumption(short: Clause, long: Clause) -> Clause:
    """Subset clause absorbs superset; returns the clause to remove."""
    if not set(short.literals) < set(long.literals):
        raise RuleViolationError("subsumption needs a strict subset")
    return long


def apply_unit_resolution(unit: Clause, target: Clause) -> tuple[int, ...]:
    """(A+K).(!K) -> shrink (A+K) to (A); the unit itself stays."""
    if unit.width != 1:
        raise RuleViolationError("resolver must be a unit clause")
    comp = complement(unit.literals[0])
    if comp not in target.literals:
        raise RuleViolationError("target must contain the complement literal")
    return tuple(lit for lit in target.literals if lit != comp)


def apply_self_subsume(short: Clause, long: Clause) -> tuple[int, ...]:
    """(A+B).(A+!B+C) -> shrink the long clause to (A+C)."""
    if not (short.width == 2 and long.width == 3):
        raise RuleViolationError("self-subsume handles width 2 against width 3")
    slong = set(long.literals)
    for lit in short.literals:
        comp = complement(lit)
        if comp in slong and set(short.literals) - {lit} <= slong - {comp}:
            return tuple(l for l in long.literals if l != comp)
    raise RuleViolationError("clauses do not fit the self-subsume shape")


# ---------------------------------------------------------------- sweeping

@dataclass
class SweepResult:
    formula: Formula
    steps: list[RewriteStep]
    stats: SweepStats
    contradiction: bool


def sweep(
    formula: Formula, backend: str = "sorted", enable_r4: bool = False
) -> SweepResult:
    """Run one discovery-and-apply pass over the formula."""
    live = {c.id: c for c in formula.clauses}
    start = max(live, default=0) + 1
    return _sweep(live, formula.n, backend, enable_r4, count(start))


def _sweep(
    live: dict[int, Clause],
    n: int,
    backend: str,
    enable_r4: bool,
    fresh_ids: "count[int]",
) -> SweepResult:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
    view = Formula(n, tuple(live[c] for c in sorted(live)))
    if backend == "sorted":
        records = expand_permutations(view)
        ordered, sort_stats = sort_records(records)
        candidates = scan_adjacent(ordered, enable_r4)
        record_count, comparisons, pairs = (
            sort_stats.record_count,
            sort_stats.comparisons,
            0,
        )
    else:
        candidates, pairs = pairwise_candidates(view, enable_r4)
        record_count = comparisons = 0

    by_lits = {c.literals: cid for cid, c in live.items()}
    steps: list[RewriteStep] = []
    contradiction = False

    def add_product(rule: str, sources: tuple[int, ...], lits: tuple[int, ...],
                    eliminated: int) -> None:
        nonlocal contradiction
        if not lits:
            steps.append(RewriteStep(rule, sources, (), None, eliminated))
            contradiction = True
            return
        fresh = next(fresh_ids)
        steps.append(RewriteStep(rule, sources, lits, fresh, eliminated))
        existing = by_lits.get(lits)
        if existing is not None:
            steps.append(RewriteStep(DEDUP, (fresh, existing), None, None, len(lits)))
        else:
            live[fresh] = Clause(fresh, lits)
            by_lits[lits] = fresh

    for cand in candidates:
        if contradiction:
            break
        if any(src not in live for src in cand.sources):
            continue
        if cand.kind == SUBSUME:
            short_id, long_id = cand.sources
            removed = apply_subsumption(live[short_id], live[long_id])
            del live[long_id]
            del by_lits[removed.literals]
            steps.append(
                RewriteStep(SUBSUME, cand.sources, None, None, removed.width)
            )
        elif cand.kind == UNIT_RESOLVE:
            unit_id, target_id = cand.sources
            target = live[target_id]
            lits = apply_unit_resolution(live[unit_id], target)
            del live[target_id]
            del by_lits[target.literals]
            add_product(UNIT_RESOLVE, cand.sources, lits, 1)
        elif cand.kind == SELF_SUBSUME:
            short_id, long_id = cand.sources
            target = live[long_id]
            lits = apply_self_subsume(live[short_id], target)
            del live[long_id]
            del by_lits[target.literals]
            add_product(SELF_SUBSUME, cand.sources, lits, 1)
        elif cand.kind == R1_MERGE:
            id_a, id_b = cand.sources
            a, b = live[id_a], live[id_b]
            lits = apply_r1_merge(a, b)
            for cid, clause in ((id_a, a), (id_b, b)):
                del live[cid]
                del by_lits[clause.literals]
            add_product(R1_MERGE, cand.sources, lits, a.width + b.width - len(lits))
        else:  # pragma: no cover - candidate kinds are closed
            raise RuleViolationError(f"unknown candidate kind {cand.kind!r}")

    stats = SweepStats(
        backend=backend,
        record_count=record_count,
        comparisons=comparisons,
        pairs_tested=pairs,
        candidates=len(candidates),
        applied=len(steps),
        eliminated=sum(s.eliminated for s in steps),
    )
    out = Formula(n, tuple(live[c] for c in sorted(live)))
    return SweepResult(out, steps, stats, contradiction)


def reduce_to_fixpoint(
    formula: Formula, backend: str = "sorted", enable_r4: bool = False
) -> tuple[IrreducibleForm, ReductionTrace]:
    """Sweep until no rule fires or the empty clause appears.

    The returned trace counts productive sweeps (at least one applied step)
    separately from total passes, which include the final confirming scan.
    """
    if formula.has_empty_clause:
        form = IrreducibleForm(
            formula.n,
            frozenset(c.literals[0] for c in formula.clauses if c.width == 1),
            tuple(c for c in formula.clauses if c.width >= 2),
            ReductionStatus.CONTRADICTION,
            formula,
        )
        return form, ReductionTrace((), 0, 0, 0)

    live = {c.id: c for c in formula.clauses}
    fresh_ids = count(max(live, default=0) + 1)
    all_steps: list[RewriteStep] = []
    stats: list[SweepStats] = []
    sweeps = 0
    passes = 0
    current = formula
    contradiction = False
    while True:
        passes += 1
        result = _sweep(live, formula.n, backend, enable_r4, fresh_ids)
        all_steps.extend(result.steps)
        stats.append(result.stats)
        current = result.formula
        if result.contradiction:
            sweeps += 1
            contradiction = True
            break
        if not result.steps:
            break
        sweeps += 1

    status = (
        ReductionStatus.CONTRADICTION if contradiction else ReductionStatus.IRREDUCIBLE
    )
    if contradiction:
        # the derived empty clause stays visible in the output formula
        current = Formula(formula.n, current.clauses, has_empty_clause=True)
    units = frozenset(c.literals[0] for c in current.clauses if c.width == 1)
    residual = tuple(c for c in current.clauses if c.width >= 2)
    form = IrreducibleForm(formula.n, units, residual, status, current)
    trace = ReductionTrace(
        tuple(all_steps),
        sweeps,
        passes,
        sum(s.eliminated for s in all_steps),
        tuple(stats),
    )
    return form, trace


# ---------------------------------------------------------------- trace replay

def replay_trace(formula: Formula, trace: ReductionTrace) -> tuple[Formula, bool]:
    """Mechanically apply trace steps to the formula.

    Used to check that a trace is a faithful, self-contained record: the
    result must match the engine's own output.  Returns (formula, hit_empty).
    """
    live = {c.id: c for c in formula.clauses}
    hit_empty = False
    for step in trace.steps:
        if step.rule == SUBSUME:
            del live[step.inputs[1]]
        elif step.rule in (UNIT_RESOLVE, SELF_SUBSUME):
            del live[step.inputs[1]]
            if step.output == ():
                hit_empty = True
                break
            live[step.output_id] = Clause(step.output_id, step.output)
        elif step.rule == R1_MERGE:
            del live[step.inputs[0]]
            del live[step.inputs[1]]
            if step.output == ():
                hit_empty = True
                break
            live[step.output_id] = Clause(step.output_id, step.output)
        elif step.rule == DEDUP:
            del live[step.inputs[0]]
        elif step.rule == TAUTOLOGY_DROP:
            live.pop(step.inputs[0], None)
        else:
            raise RuleViolationError(f"unknown rule {step.rule!r} in trace")
    replayed = Formula(
        formula.n, tuple(live[c] for c in sorted(live)), hit_empty
    )
    return replayed, hit_empty


def format_trace(trace: ReductionTrace) -> str:
    """One line per step: rule, input ids, output literals or removal."""
    lines = []
    for i, step in enumerate(trace.steps, start=1):
        inputs = ",".join(str(x) for x in step.inputs)
        if step.output is None:
            out = "removed"
        elif step.output == ():
            out = "empty"
        else:
            out = f"{step.output_id}:" + ",".join(str(l) for l in step.output)
        lines.append(
            f"step {i} rule={step.rule} inputs={inputs} output={out} "
            f"eliminated={step.eliminated}"
        )
    lines.append(
        f"trace sweeps={trace.sweeps} passes={trace.passes} "
        f"eliminations={trace.eliminations} steps={len(trace.steps)}"
    )
    return "\n".join(lines) + "\n"
