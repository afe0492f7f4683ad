"""Core value types for 3-CNF formulas.

Literal encoding: variable v has positive literal 2v-1 and negated literal 2v.
A literal and its complement are therefore adjacent integers, clauses are
sorted tuples of ints, and sorting alone brings complementary literals (and
clauses that differ in one complemented position) next to each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

MAX_WIDTH = 3


class CnfError(Exception):
    """Base class for all errors raised by this package."""


class WidthExceededError(CnfError):
    """Clause wider than three literals after duplicate removal."""


class VariableOutOfRangeError(CnfError):
    """Literal refers to a variable beyond the declared count."""


class IncompleteAssignmentError(CnfError):
    """Evaluation needs a truth value for every declared variable."""


# ---------------------------------------------------------------- literals

def encode_literal(var: int, negated: bool = False) -> int:
    if var < 1:
        raise VariableOutOfRangeError(f"variable index must be >= 1, got {var}")
    return 2 * var if negated else 2 * var - 1


def variable_of(lit: int) -> int:
    return (lit + 1) // 2


def is_negated(lit: int) -> bool:
    return lit % 2 == 0


def complement(lit: int) -> int:
    """Map 2v-1 <-> 2v; involutive by construction."""
    return lit + 1 if lit % 2 else lit - 1


def from_dimacs(d: int) -> int:
    if d == 0:
        raise ValueError("0 is a clause terminator, not a literal")
    return 2 * d - 1 if d > 0 else -2 * d


def to_dimacs(lit: int) -> int:
    v = variable_of(lit)
    return -v if is_negated(lit) else v


def normalize_clause(raw: Iterable[int]) -> Optional[tuple[int, ...]]:
    """Sort, deduplicate, and width-check a clause.

    Returns the normalized literal tuple, () for an empty clause, or None
    when the clause contains a complementary pair (a tautology, droppable).
    Raises WidthExceededError when more than three distinct literals remain.
    """
    lits = sorted(set(raw))
    for lit in lits:
        if lit < 1:
            raise VariableOutOfRangeError(f"bad literal index {lit}")
    for a, b in zip(lits, lits[1:]):
        if b == a + 1 and a % 2 == 1:
            return None
    if len(lits) > MAX_WIDTH:
        raise WidthExceededError(
            f"clause has {len(lits)} distinct literals, limit is {MAX_WIDTH}"
        )
    return tuple(lits)


# ---------------------------------------------------------------- rewrite vocabulary

# Rule labels shared by the sweep engine and construction-time cleanup.
R1_MERGE = "R1-merge"
SUBSUME = "subsume"
UNIT_RESOLVE = "unit-resolve"
SELF_SUBSUME = "self-subsume"
DEDUP = "dedup"
TAUTOLOGY_DROP = "tautology-drop"

RULE_PRIORITY = {
    SUBSUME: 0,
    UNIT_RESOLVE: 1,
    SELF_SUBSUME: 2,
    R1_MERGE: 3,
}


@dataclass(frozen=True)
class RewriteStep:
    """One applied rewrite.

    output is the product clause's literals, () when the product is the
    empty clause (contradiction), or None when the step only removes a
    clause.  eliminated counts literal instances removed from the formula.
    """

    rule: str
    inputs: tuple[int, ...]
    output: Optional[tuple[int, ...]]
    output_id: Optional[int]
    eliminated: int


# ---------------------------------------------------------------- clauses / formulas

@dataclass(frozen=True)
class Clause:
    id: int
    literals: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.literals)


@dataclass(frozen=True)
class Formula:
    """A conjunction of clauses over variables 1..n.

    has_empty_clause marks an input-level empty clause (the formula is
    unsatisfiable before any rewriting happens).
    """

    n: int
    clauses: tuple[Clause, ...]
    has_empty_clause: bool = False

    @property
    def m(self) -> int:
        return len(self.clauses) + (1 if self.has_empty_clause else 0)

    @cached_property
    def by_id(self) -> dict[int, Clause]:
        return {c.id: c for c in self.clauses}

    def literal_lists(self) -> list[tuple[int, ...]]:
        return [c.literals for c in self.clauses]

    def literal_instances(self) -> int:
        return sum(c.width for c in self.clauses)

    def signature(self) -> tuple:
        """Identity modulo clause ids: (n, sorted clause tuples, empty flag)."""
        return (self.n, tuple(sorted(self.literal_lists())), self.has_empty_clause)


def sanitize_clauses(
    n: int, raw_clauses: Iterable[Iterable[int]]
) -> tuple[list[Clause], list[RewriteStep], bool]:
    """Normalize raw clauses into Clause records with construction cleanup.

    Ids are assigned in input order (tautologies and duplicates included, so
    ids are stable positions); dropped clauses are reported as rewrite steps.
    """
    kept: list[Clause] = []
    steps: list[RewriteStep] = []
    seen: dict[tuple[int, ...], int] = {}
    has_empty = False
    next_id = 1
    for raw in raw_clauses:
        lits = normalize_clause(raw)
        if lits == ():
            has_empty = True
            continue
        cid = next_id
        next_id += 1
        if lits is None:
            raw_sorted = tuple(sorted(set(raw)))
            steps.append(
                RewriteStep(TAUTOLOGY_DROP, (cid,), None, None, len(raw_sorted))
            )
            continue
        for lit in lits:
            if variable_of(lit) > n:
                raise VariableOutOfRangeError(
                    f"literal {lit} needs variable {variable_of(lit)}, formula has {n}"
                )
        if lits in seen:
            steps.append(RewriteStep(DEDUP, (cid, seen[lits]), None, None, len(lits)))
            continue
        seen[lits] = cid
        kept.append(Clause(cid, lits))
    return kept, steps, has_empty


def build_formula(n: int, raw_clauses: Iterable[Iterable[int]]) -> Formula:
    clauses, _, has_empty = sanitize_clauses(n, raw_clauses)
    return Formula(n, tuple(clauses), has_empty)


def build_formula_traced(
    n: int, raw_clauses: Iterable[Iterable[int]]
) -> tuple[Formula, list[RewriteStep]]:
    clauses, steps, has_empty = sanitize_clauses(n, raw_clauses)
    return Formula(n, tuple(clauses), has_empty), steps


# ---------------------------------------------------------------- assignments

@dataclass(frozen=True)
class Assignment:
    """Total truth assignment; values[i] is the value of variable i+1."""

    values: tuple[bool, ...]

    @classmethod
    def all_false(cls, n: int) -> "Assignment":
        return cls((False,) * n)

    @classmethod
    def from_map(cls, n: int, partial: dict[int, bool], default: bool = False) -> "Assignment":
        return cls(tuple(partial.get(v, default) for v in range(1, n + 1)))

    def value(self, var: int) -> bool:
        return self.values[var - 1]

    def satisfies(self, lit: int) -> bool:
        return self.values[variable_of(lit) - 1] == (not is_negated(lit))


def evaluate_clause(literals: Iterable[int], assignment: Assignment) -> bool:
    return any(assignment.satisfies(lit) for lit in literals)


def evaluate(formula: Formula, assignment: Assignment) -> bool:
    """Truth value of the conjunction under a total assignment."""
    if len(assignment.values) < formula.n:
        raise IncompleteAssignmentError(
            f"assignment covers {len(assignment.values)} variables, formula has {formula.n}"
        )
    if formula.has_empty_clause:
        return False
    return all(evaluate_clause(c.literals, assignment) for c in formula.clauses)
