"""Branch expansion over an irreducible formula.

The residual clauses are visited in ascending id order; at each clause the
search tries its literals in ascending index order, skipping literals that
conflict with the partial assignment built so far.  A clause whose literals
all conflict forces a backtrack (one "reroute").  Every surviving root-to-
leaf path is a branch whose partial assignment satisfies the formula;
unconstrained variables default to false when a total assignment is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import Assignment, CnfError, to_dimacs, variable_of
from .engine import IrreducibleForm, ReductionStatus


class InvalidStateError(CnfError):
    """Expansion requires an irreducible (non-contradictory) form."""


class SearchKind(Enum):
    FOUND = "FoundAssignments"
    EXHAUSTED = "Exhausted"
    BUDGET = "BudgetExceeded"


@dataclass(frozen=True)
class Branch:
    """One surviving path: chosen literals plus the partial assignment."""

    chosen: tuple[int, ...]
    partial: tuple[tuple[int, bool], ...]


@dataclass(frozen=True)
class SearchOutcome:
    kind: SearchKind
    assignments: tuple[Assignment, ...]
    branches: tuple[Branch, ...]
    branches_explored: int
    reroutes: int
    complete: bool


def expand(
    form: IrreducibleForm,
    limit: Optional[int] = None,
    budget: Optional[int] = None,
) -> SearchOutcome:
    """Enumerate satisfying branches of an irreducible form.

    limit caps recorded solutions; budget caps literal choices taken
    (branch visits).  With neither, the search runs to completion and
    `complete` is True.
    """
    if form.status is not ReductionStatus.IRREDUCIBLE:
        raise InvalidStateError("expansion needs an irreducible form")
    n = form.n
    assign = bytearray(n + 1)  # 0 unset, 1 true, 2 false
    unit_map: dict[int, bool] = {}
    for lit in sorted(form.units):
        var = variable_of(lit)
        want = lit % 2 == 1
        assign[var] = 1 if want else 2
        unit_map[var] = want

    residual = sorted(form.residual, key=lambda c: c.id)
    clause_lits = [c.literals for c in residual]
    depth = len(clause_lits)

    assignments: list[Assignment] = []
    branches: list[Branch] = []
    explored = 0
    reroutes = 0
    budget_hit = False
    limit_hit = False

    # stack entries: (position tried at that level, literal, var set or 0)
    stack: list[tuple[int, int, int]] = []
    level = 0
    pos = 0
    first_entry = True

    while True:
        if level == depth:
            partial = dict(unit_map)
            for _, lit, var_set in stack:
                if var_set:
                    partial[var_set] = lit % 2 == 1
            branches.append(
                Branch(
                    tuple(entry[1] for entry in stack),
                    tuple(sorted(partial.items())),
                )
            )
            assignments.append(
                Assignment(tuple(assign[v] == 1 for v in range(1, n + 1)))
            )
            if limit is not None and len(assignments) >= limit:
                limit_hit = True
                break
            if not stack:
                break
            level -= 1
            pos, _, var_set = stack.pop()
            if var_set:
                assign[var_set] = 0
            pos += 1
            first_entry = False
            continue

        lits = clause_lits[level]
        descended = False
        while pos < len(lits):
            lit = lits[pos]
            var = variable_of(lit)
            want = 1 if lit % 2 else 2
            current = assign[var]
            if current == 0 or current == want:
                if budget is not None and explored >= budget:
                    budget_hit = True
                    break
                explored += 1
                var_set = var if current == 0 else 0
                if var_set:
                    assign[var] = want
                stack.append((pos, lit, var_set))
                level += 1
                pos = 0
                first_entry = True
                descended = True
                break
            pos += 1
        if budget_hit:
            break
        if descended:
            continue
        if first_entry:
            reroutes += 1
        if not stack:
            break
        level -= 1
        pos, _, var_set = stack.pop()
        if var_set:
            assign[var_set] = 0
        pos += 1
        first_entry = False

    complete = not (budget_hit or limit_hit)
    if assignments:
        kind = SearchKind.FOUND
    elif budget_hit:
        kind = SearchKind.BUDGET
    else:
        kind = SearchKind.EXHAUSTED
    return SearchOutcome(
        kind,
        tuple(assignments),
        tuple(branches),
        explored,
        reroutes,
        complete,
    )


def count_branch_models(form: IrreducibleForm, table_limit: int = 24) -> int:
    """Count distinct total models covered by the union of all branches.

    Each branch's partial assignment is widened over the unconstrained
    variables; the union of those sets is computed with bitmask tables, so
    the variable count must stay within table_limit.
    """
    from .oracle import TooLargeError, variable_masks

    n = form.n
    if n > table_limit:
        raise TooLargeError(f"{n} variables exceed the {table_limit}-variable table cap")
    outcome = expand(form)
    masks = variable_masks(n)
    full = (1 << (1 << n)) - 1
    union = 0
    for branch in outcome.branches:
        mask = full
        for var, value in branch.partial:
            mask &= masks[var - 1] if value else full ^ masks[var - 1]
        union |= mask
    return union.bit_count()


def format_value_line(assignment: Assignment) -> str:
    """Solver-style value line: 'v 1 -2 3 0'."""
    lits = [
        str(v if value else -v)
        for v, value in enumerate(assignment.values, start=1)
    ]
    return "v " + " ".join(lits + ["0"])


def format_branch(branch: Branch) -> str:
    chosen = ",".join(str(to_dimacs(lit)) for lit in branch.chosen)
    pairs = " ".join(f"{var}={'1' if val else '0'}" for var, val in branch.partial)
    return f"branch chosen=[{chosen}] partial[{pairs}]"
