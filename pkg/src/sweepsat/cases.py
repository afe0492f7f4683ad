"""Case-by-case audit of constraint interaction with a width-3 clause.

The suite attaches every interesting added constraint to the base clause
(Q+W+E) and checks, with the truth-table oracle as referee, what the sweep
engine does with it: some constraints are contradictions the sweeps catch,
some vanish as tautologies, some sit inert as one of four irreducible
shapes, and the products built from those shapes stay satisfiable.  The
audit also verifies the distribution identities the record expansion relies
on, and exhibits the one rewrite that is NOT an equivalence unless the unit
clause is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    Formula,
    TAUTOLOGY_DROP,
    build_formula,
    build_formula_traced,
    variable_of,
)
from .engine import ReductionStatus, reduce_to_fixpoint
from .oracle import (
    SAT,
    clause_mask,
    dnf_mask,
    equivalent,
    formula_mask,
    truth_table_solve,
)

# Fixed variable numbering for the whole suite:
#   Q=1 W=2 E=3 A=4 B=5 C=6, so literal Q=1, !Q=2, W=3, !W=4, E=5, !E=6, ...
N_VARS = 6
BASE = (1, 3, 5)  # (Q+W+E)

SPOTTED_BY_SWEEP = "SpottedBySweep"
SPOTTED_AFTER_SORTING = "SpottedAfterSorting"
NO_CONSTRAINT = "NoConstraint"
SATISFIABLE = "Satisfiable"


def remains(item: int) -> str:
    return f"RemainsItem{item}"


@dataclass(frozen=True)
class CaseSpec:
    label: str
    extras: tuple[tuple[int, ...], ...]
    claim: str
    rhs_extras: Optional[tuple[tuple[int, ...], ...]] = None
    expected_models: Optional[int] = None


ITEM3_PRODUCT = ((2, 4), (2, 6), (4, 6))
ITEM4_PRODUCT = ((2, 3, 6), (2, 4, 5), (1, 4, 6))

CASES: tuple[CaseSpec, ...] = (
    # Attaching a single constraint directly.
    CaseSpec("3.1/A=!Q", ((2,),), SPOTTED_BY_SWEEP),
    CaseSpec("3.1/item1", ((2, 9),), remains(1)),
    CaseSpec("3.1/item2", ((2, 9, 11),), remains(2)),
    # Substitutions into the two-literal shape (!Q+B).
    CaseSpec("3.2/B=Q", ((2, 1),), NO_CONSTRAINT, rhs_extras=()),
    CaseSpec("3.2/B=!Q", ((2, 2),), SPOTTED_BY_SWEEP, rhs_extras=((2,),)),
    CaseSpec("3.2/B=W", ((2, 3),), SPOTTED_AFTER_SORTING),
    CaseSpec("3.2/B=E", ((2, 5),), SPOTTED_AFTER_SORTING),
    CaseSpec("3.2/B=!W", ((2, 4),), remains(3)),
    CaseSpec("3.2/B=!E", ((2, 6),), remains(3)),
    # Substitutions into the three-literal shape (!Q+B+C).
    CaseSpec("3.2/B=Q,C=fresh", ((2, 1, 11),), NO_CONSTRAINT, rhs_extras=()),
    CaseSpec("3.2/B=!Q,C=fresh", ((2, 2, 11),), remains(1)),
    CaseSpec("3.2/B=C=W", ((2, 3, 3),), SPOTTED_AFTER_SORTING),
    CaseSpec("3.2/B=C=E", ((2, 5, 5),), SPOTTED_AFTER_SORTING),
    CaseSpec("3.2/B=C=!W", ((2, 4, 4),), remains(3)),
    CaseSpec("3.2/B=C=!E", ((2, 6, 6),), remains(3)),
    CaseSpec("3.2/B=W,C=!W", ((2, 3, 4),), NO_CONSTRAINT, rhs_extras=()),
    CaseSpec("3.2/B=E,C=!E", ((2, 5, 6),), NO_CONSTRAINT, rhs_extras=()),
    CaseSpec("3.2/B=W,C=E", ((2, 3, 5),), SPOTTED_AFTER_SORTING),
    CaseSpec("3.2/B=W,C=!E", ((2, 3, 6),), remains(4)),
    CaseSpec("3.2/B=E,C=!W", ((2, 4, 5),), remains(4)),
    # Products built from the irreducible shapes.
    CaseSpec("3.3/item3-pair", ((2, 4),), SATISFIABLE),
    CaseSpec("3.3/item4-single", ((2, 3, 6),), SATISFIABLE),
    CaseSpec("3.3/item3-product", ITEM3_PRODUCT, SATISFIABLE, expected_models=3),
    CaseSpec("3.3/item4-product", ITEM4_PRODUCT, SATISFIABLE, expected_models=4),
    CaseSpec(
        "3.3/items3+4-product",
        ITEM3_PRODUCT + ITEM4_PRODUCT,
        SATISFIABLE,
        expected_models=3,
    ),
)


@dataclass(frozen=True)
class CaseResult:
    label: str
    claim: str
    matches_claim: bool
    equivalence_ok: bool
    engine_detected: bool
    needed_r4: bool
    model_count: int
    models_ok: bool
    notes: str = ""


@dataclass(frozen=True)
class IdentityResult:
    label: str
    holds: bool


@dataclass(frozen=True)
class SuiteResult:
    enable_r4: bool
    cases: tuple[CaseResult, ...]
    identities: tuple[IdentityResult, ...]
    exhibits: tuple[IdentityResult, ...]

    @property
    def discrepancies(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.cases if not c.matches_claim)

    @property
    def r4_needed_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.cases if c.needed_r4)

    @property
    def all_equalities_ok(self) -> bool:
        return (
            all(c.equivalence_ok and c.models_ok for c in self.cases)
            and all(i.holds for i in self.identities)
        )


def _tight_n(raw_clauses: tuple[tuple[int, ...], ...]) -> int:
    """Smallest variable count covering the clauses, so model counts are
    taken over the variables the case actually mentions."""
    return max(variable_of(lit) for clause in raw_clauses for lit in clause)


def case_formula(spec: CaseSpec) -> Formula:
    raw = (BASE,) + spec.extras
    return build_formula(_tight_n(raw), raw)


def _run_case(spec: CaseSpec, enable_r4: bool) -> CaseResult:
    raw = (BASE,) + spec.extras
    formula, build_steps = build_formula_traced(_tight_n(raw), raw)
    form, trace = reduce_to_fixpoint(formula, enable_r4=enable_r4)
    form_other, trace_other = reduce_to_fixpoint(formula, enable_r4=not enable_r4)
    if enable_r4:
        steps_on, steps_off = len(trace.steps), len(trace_other.steps)
    else:
        steps_on, steps_off = len(trace_other.steps), len(trace.steps)
    needed_r4 = steps_on > 0 and steps_off == 0

    oracle = truth_table_solve(formula)
    detected = bool(trace.steps) or any(
        s.rule == TAUTOLOGY_DROP for s in build_steps
    )

    base_only = build_formula(N_VARS, (BASE,))
    claim = spec.claim
    if claim in (SPOTTED_BY_SWEEP, SPOTTED_AFTER_SORTING):
        matches = len(trace.steps) > 0
    elif claim == NO_CONSTRAINT:
        matches = (
            any(s.rule == TAUTOLOGY_DROP for s in build_steps)
            and len(trace.steps) == 0
            and equivalent(formula, base_only)
        )
    elif claim.startswith("RemainsItem"):
        matches = (
            form.status is ReductionStatus.IRREDUCIBLE and len(trace.steps) == 0
        )
    elif claim == SATISFIABLE:
        matches = (
            form.status is ReductionStatus.IRREDUCIBLE and oracle.verdict == SAT
        )
    else:  # pragma: no cover - claim vocabulary is closed
        raise ValueError(f"unknown claim {claim!r}")

    if spec.rhs_extras is not None:
        rhs = build_formula(N_VARS, (BASE,) + spec.rhs_extras)
        equivalence_ok = equivalent(formula, rhs)
    elif form.is_contradiction:
        equivalence_ok = oracle.verdict != SAT
    else:
        equivalence_ok = equivalent(formula, form.formula)

    models_ok = (
        spec.expected_models is None or oracle.model_count == spec.expected_models
    )
    return CaseResult(
        label=spec.label,
        claim=claim,
        matches_claim=matches,
        equivalence_ok=equivalence_ok,
        engine_detected=detected,
        needed_r4=needed_r4,
        model_count=oracle.model_count,
        models_ok=models_ok,
    )


def check_distribution_identities() -> tuple[IdentityResult, ...]:
    """OR-over-AND expansions of (Q+W+E)(...) and the De Morgan complement."""
    n = N_VARS
    full = (1 << (1 << n)) - 1
    results = []

    lhs = formula_mask(build_formula(n, [BASE, (7,)]))
    rhs = dnf_mask([(1, 7), (3, 7), (5, 7)], n)
    results.append(IdentityResult("distribute-unit", lhs == rhs))

    lhs = formula_mask(build_formula(n, [BASE, (7, 9)]))
    rhs = dnf_mask(
        [(l, a) for l in BASE for a in (7, 9)], n
    )
    results.append(IdentityResult("distribute-pair", lhs == rhs))

    lhs = formula_mask(build_formula(n, [BASE, (7, 9, 11)]))
    rhs = dnf_mask([(l, a) for l in BASE for a in (7, 9, 11)], n)
    results.append(IdentityResult("distribute-triple", lhs == rhs))

    lhs = full ^ clause_mask(BASE, n)
    rhs = dnf_mask([(2, 4, 6)], n)
    results.append(IdentityResult("de-morgan-clause", lhs == rhs))

    combined = build_formula(n, (BASE,) + ITEM3_PRODUCT + ITEM4_PRODUCT)
    item3 = build_formula(n, (BASE,) + ITEM3_PRODUCT)
    results.append(
        IdentityResult("combined-equals-item3-product", equivalent(combined, item3))
    )
    return tuple(results)


def unit_rule_exhibits() -> tuple[IdentityResult, ...]:
    """(A+K).(!K) may shrink to (A) only if the unit (!K) is kept."""
    lhs = build_formula(2, [(1, 3), (4,)])
    drop_unit = build_formula(2, [(1,)])
    keep_unit = build_formula(2, [(1,), (4,)])
    return (
        IdentityResult("unit-shrink-drops-unit", equivalent(lhs, drop_unit)),
        IdentityResult("unit-shrink-keeps-unit", equivalent(lhs, keep_unit)),
    )


def run_case_suite(enable_r4: bool = False) -> SuiteResult:
    results = tuple(_run_case(spec, enable_r4) for spec in CASES)
    return SuiteResult(
        enable_r4=enable_r4,
        cases=results,
        identities=check_distribution_identities(),
        exhibits=unit_rule_exhibits(),
    )


def format_suite_report(suite: SuiteResult) -> str:
    lines = [f"config r4={'on' if suite.enable_r4 else 'off'} cases={len(suite.cases)}"]
    for ident in suite.identities:
        lines.append(f"identity label={ident.label} holds={_b(ident.holds)}")
    for case in suite.cases:
        lines.append(
            f"case label={case.label} claim={case.claim} "
            f"matches={_b(case.matches_claim)} equiv={_b(case.equivalence_ok)} "
            f"detected={_b(case.engine_detected)} r4_needed={_b(case.needed_r4)} "
            f"models={case.model_count}"
        )
    for ex in suite.exhibits:
        lines.append(f"exhibit label={ex.label} equivalent={_b(ex.holds)}")
    lines.append(
        f"summary equalities_ok={_b(suite.all_equalities_ok)} "
        f"discrepancies={len(suite.discrepancies)}"
        + (
            " [" + ",".join(suite.discrepancies) + "]"
            if suite.discrepancies
            else ""
        )
        + f" r4_needed={len(suite.r4_needed_labels)}"
        + (
            " [" + ",".join(suite.r4_needed_labels) + "]"
            if suite.r4_needed_labels
            else ""
        )
    )
    return "\n".join(lines) + "\n"


def _b(value: bool) -> str:
    return "true" if value else "false"
