"""Ground-truth solvers used to audit the reduction pipeline.

The primary oracle evaluates a formula on all 2^n assignments at once,
holding each variable's truth column as one big integer (bit a of the mask
answers "is this literal true under assignment index a?").  Assignment
indexes order variable 1 as the most significant bit, so the lowest set
bit of a model mask is the lexicographically first model.  A plain
backtracking solver provides an independent second opinion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .core import (
    Assignment,
    Clause,
    CnfError,
    Formula,
    complement,
    evaluate,
    is_negated,
    variable_of,
)

TABLE_LIMIT = 24

SAT = "SAT"
UNSAT = "UNSAT"


class TooLargeError(CnfError):
    """Truth-table oracle is capped at TABLE_LIMIT variables."""


@dataclass(frozen=True)
class OracleResult:
    verdict: str
    model_count: Optional[int]
    witness: Optional[Assignment]


@lru_cache(maxsize=4)
def variable_masks(n: int) -> tuple[int, ...]:
    """masks[v-1] has bit a set iff variable v is true in assignment a."""
    masks: list[int] = []
    size = 1
    for _ in range(n):
        # double the universe; the newly added variable reads the new top bit
        masks = [m | (m << size) for m in masks]
        masks.append(((1 << size) - 1) << size)
        size <<= 1
    masks.reverse()
    return tuple(masks)


def _check_size(n: int) -> None:
    if n > TABLE_LIMIT:
        raise TooLargeError(
            f"{n} variables exceed the {TABLE_LIMIT}-variable table cap"
        )


def literal_mask(lit: int, n: int) -> int:
    _check_size(n)
    masks = variable_masks(n)
    full = (1 << (1 << n)) - 1
    m = masks[variable_of(lit) - 1]
    return full ^ m if is_negated(lit) else m


def clause_mask(literals: Iterable[int], n: int) -> int:
    acc = 0
    for lit in literals:
        acc |= literal_mask(lit, n)
    return acc


def formula_mask(formula: Formula, n: Optional[int] = None) -> int:
    """Bitmask of all models of the formula over n variables."""
    width = formula.n if n is None else n
    _check_size(width)
    if formula.has_empty_clause:
        return 0
    acc = (1 << (1 << width)) - 1
    for clause in formula.clauses:
        acc &= clause_mask(clause.literals, width)
        if not acc:
            break
    return acc


def dnf_mask(terms: Iterable[Iterable[int]], n: int) -> int:
    """Models of a disjunction of conjunctions (for identity checks)."""
    acc = 0
    for term in terms:
        t = (1 << (1 << n)) - 1
        for lit in term:
            t &= literal_mask(lit, n)
        acc |= t
    return acc


def _witness_from_mask(mask: int, n: int) -> Assignment:
    index = (mask & -mask).bit_length() - 1
    values = tuple(bool((index >> (n - v)) & 1) for v in range(1, n + 1))
    return Assignment(values)


def truth_table_solve(formula: Formula) -> OracleResult:
    """Exact verdict, model count, and first witness via full enumeration."""
    _check_size(formula.n)
    mask = formula_mask(formula)
    if not mask:
        return OracleResult(UNSAT, 0, None)
    witness = _witness_from_mask(mask, formula.n)
    assert evaluate(formula, witness)
    return OracleResult(SAT, mask.bit_count(), witness)


def equivalent(f1: Formula, f2: Formula) -> bool:
    """Model-set equality over the union of both variable ranges."""
    n = max(f1.n, f2.n)
    _check_size(n)
    return formula_mask(f1, n) == formula_mask(f2, n)


def backtracking_solve(formula: Formula) -> OracleResult:
    """Independent DPLL-style check: verdict and witness, no count."""
    if formula.has_empty_clause:
        return OracleResult(UNSAT, None, None)
    clauses = [c.literals for c in formula.clauses]
    n = formula.n
    assign = bytearray(n + 1)  # 0 unset, 1 true, 2 false

    def lit_state(lit: int) -> int:
        v = assign[variable_of(lit)]
        if v == 0:
            return 0
        true_here = (v == 1) == (lit % 2 == 1)
        return 1 if true_here else 2

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for lits in clauses:
                unassigned = None
                satisfied = False
                open_count = 0
                for lit in lits:
                    st = lit_state(lit)
                    if st == 1:
                        satisfied = True
                        break
                    if st == 0:
                        open_count += 1
                        unassigned = lit
                if satisfied:
                    continue
                if open_count == 0:
                    return False
                if open_count == 1:
                    var = variable_of(unassigned)
                    assign[var] = 1 if unassigned % 2 else 2
                    trail.append(var)
                    changed = True
        return True

    def search() -> bool:
        trail: list[int] = []
        if not propagate(trail):
            for var in trail:
                assign[var] = 0
            return False
        var = next((v for v in range(1, n + 1) if assign[v] == 0), None)
        if var is None:
            return True
        for value in (2, 1):  # false first
            assign[var] = value
            if search():
                return True
            assign[var] = 0
        for v in trail:
            assign[v] = 0
        return False

    if not search():
        return OracleResult(UNSAT, None, None)
    witness = Assignment(tuple(assign[v] == 1 for v in range(1, n + 1)))
    assert evaluate(formula, witness)
    return OracleResult(SAT, None, witness)
