"""Permutation expansion, counting mergesort, and the adjacency scan.

Every clause is expanded into one record per permutation of its literals
(6 for width 3, 2 for width 2, 1 for width 1).  After sorting, every
reduction opportunity between two clauses shows up between records that sit
in the same run or in adjacent runs, so one linear scan finds them all.
The quadratic all-pairs scan is kept alongside as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby, permutations

from .core import (
    R1_MERGE,
    RULE_PRIORITY,
    SELF_SUBSUME,
    SUBSUME,
    UNIT_RESOLVE,
    Clause,
    Formula,
    complement,
)

# Sentinel padding a record key beyond any real literal index, so shorter
# clauses sort after longer ones sharing a prefix.
PAD = 1 << 30


@dataclass(frozen=True)
class PermRecord:
    key: tuple[int, int, int]
    source: int
    width: int


@dataclass(frozen=True)
class SortStats:
    record_count: int
    comparisons: int

    def comparison_bound(self) -> float:
        """2R*log2(R) + R, the advertised mergesort ceiling."""
        import math

        r = self.record_count
        if r <= 1:
            return float(r)
        return 2.0 * r * math.log2(r) + r


@dataclass(frozen=True)
class Candidate:
    """A reduction opportunity between live clauses.

    sources is role-ordered: (short, long) for subsume/self-subsume,
    (unit, target) for unit-resolve, ascending ids for R1-merge.
    detail is the literal removed from the target (unit-resolve and
    self-subsume) or the odd literal of the complementary pair (R1-merge).
    """

    kind: str
    sources: tuple[int, ...]
    detail: int | None

    def order_key(self) -> tuple:
        return (
            RULE_PRIORITY[self.kind],
            tuple(sorted(self.sources)),
            self.detail or 0,
            self.sources,
        )


def expand_permutations(formula: Formula) -> list[PermRecord]:
    """One record per literal permutation of every clause."""
    records: list[PermRecord] = []
    for clause in formula.clauses:
        lits = clause.literals
        w = len(lits)
        for perm in permutations(lits):
            key = tuple(perm) + (PAD,) * (3 - w)
            records.append(PermRecord(key, clause.id, w))
    return records


def expected_record_count(formula: Formula) -> int:
    per_width = {1: 1, 2: 2, 3: 6}
    return sum(per_width[c.width] for c in formula.clauses)


def sort_records(records: list[PermRecord]) -> tuple[list[PermRecord], SortStats]:
    """Bottom-up mergesort on (key, source), counting element comparisons."""
    items = list(records)
    n = len(items)
    if n <= 1:
        return items, SortStats(n, 0)
    keys = [(r.key, r.source) for r in items]
    order = list(range(n))
    comparisons = 0
    width = 1
    while width < n:
        merged: list[int] = []
        for start in range(0, n, 2 * width):
            left = order[start : start + width]
            right = order[start + width : start + 2 * width]
            i = j = 0
            while i < len(left) and j < len(right):
                comparisons += 1
                if keys[left[i]] <= keys[right[j]]:
                    merged.append(left[i])
                    i += 1
                else:
                    merged.append(right[j])
                    j += 1
            merged.extend(left[i:])
            merged.extend(right[j:])
        order = merged
        width *= 2
    return [items[i] for i in order], SortStats(n, comparisons)


def scan_adjacent(
    sorted_records: list[PermRecord], enable_r4: bool = False
) -> list[Candidate]:
    """Collect reduction candidates from runs of the sorted record list.

    Records are grouped by leading literal (blocks), then by second literal
    (sub-runs).  Everything detectable between two clauses appears either
    inside one sub-run, between sub-runs with complementary second literals,
    or between blocks with complementary leading literals.
    """
    found: set[tuple] = set()
    blocks = [
        (lead, list(group))
        for lead, group in groupby(sorted_records, key=lambda r: r.key[0])
    ]

    for lead, recs in blocks:
        unit = next((r for r in recs if r.width == 1), None)
        if unit is not None:
            for r in recs:
                if r.source != unit.source:
                    found.add((SUBSUME, (unit.source, r.source), None))
        wide = [r for r in recs if r.width >= 2]
        subruns = [
            (second, list(group))
            for second, group in groupby(wide, key=lambda r: r.key[1])
        ]
        for second, srecs in subruns:
            two = next((r for r in srecs if r.width == 2), None)
            if two is not None:
                for r in srecs:
                    if r.width == 3 and r.source != two.source:
                        found.add((SUBSUME, (two.source, r.source), None))
            for a, b in zip(srecs, srecs[1:]):
                if (
                    a.width == 3
                    and b.width == 3
                    and a.key[2] % 2 == 1
                    and b.key[2] == a.key[2] + 1
                ):
                    pair = tuple(sorted((a.source, b.source)))
                    found.add((R1_MERGE, pair, a.key[2]))
        for (sa, ra), (sb, rb) in zip(subruns, subruns[1:]):
            if sa % 2 == 1 and sb == sa + 1:
                two_a = next((r for r in ra if r.width == 2), None)
                two_b = next((r for r in rb if r.width == 2), None)
                if two_a is not None and two_b is not None:
                    pair = tuple(sorted((two_a.source, two_b.source)))
                    found.add((R1_MERGE, pair, sa))
                if enable_r4:
                    if two_a is not None:
                        for r in rb:
                            if r.width == 3 and r.source != two_a.source:
                                found.add((SELF_SUBSUME, (two_a.source, r.source), sb))
                    if two_b is not None:
                        for r in ra:
                            if r.width == 3 and r.source != two_b.source:
                                found.add((SELF_SUBSUME, (two_b.source, r.source), sa))

    for (la, ra), (lb, rb) in zip(blocks, blocks[1:]):
        if la % 2 == 1 and lb == la + 1:
            unit_a = next((r for r in ra if r.width == 1), None)
            unit_b = next((r for r in rb if r.width == 1), None)
            if unit_a is not None and unit_b is not None:
                pair = tuple(sorted((unit_a.source, unit_b.source)))
                found.add((R1_MERGE, pair, la))
            if unit_a is not None:
                for r in rb:
                    found.add((UNIT_RESOLVE, (unit_a.source, r.source), lb))
            if unit_b is not None:
                for r in ra:
                    if unit_a is not None and r.source == unit_a.source:
                        # unit-vs-unit pairs are emitted once, odd literal first
                        continue
                    found.add((UNIT_RESOLVE, (unit_b.source, r.source), la))

    return _canonical(found)


def pairwise_candidates(
    formula: Formula, enable_r4: bool = False
) -> tuple[list[Candidate], int]:
    """Reference scan testing all clause pairs; returns (candidates, pairs)."""
    clauses = formula.clauses
    found: set[tuple] = set()
    pairs = 0
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            pairs += 1
            _pair_candidates(clauses[i], clauses[j], found, enable_r4)
    return _canonical(found), pairs


def _pair_candidates(
    c: Clause, d: Clause, found: set[tuple], enable_r4: bool
) -> None:
    sc, sd = set(c.literals), set(d.literals)
    if c.width == d.width:
        shared = sc & sd
        if len(shared) == c.width - 1:
            lc = next(iter(sc - shared))
            ld = next(iter(sd - shared))
            if ld == complement(lc):
                found.add((R1_MERGE, tuple(sorted((c.id, d.id))), min(lc, ld)))
    if sc < sd:
        found.add((SUBSUME, (c.id, d.id), None))
    elif sd < sc:
        found.add((SUBSUME, (d.id, c.id), None))
    if c.width == 1 and d.width == 1:
        u, w = c.literals[0], d.literals[0]
        if w == complement(u):
            odd, even = (c, d) if u % 2 == 1 else (d, c)
            found.add((UNIT_RESOLVE, (odd.id, even.id), even.literals[0]))
    else:
        if c.width == 1 and complement(c.literals[0]) in sd:
            found.add((UNIT_RESOLVE, (c.id, d.id), complement(c.literals[0])))
        if d.width == 1 and complement(d.literals[0]) in sc:
            found.add((UNIT_RESOLVE, (d.id, c.id), complement(d.literals[0])))
    if enable_r4:
        for short, long in ((c, d), (d, c)):
            if short.width == 2 and long.width == 3:
                slong = set(long.literals)
                for lit in short.literals:
                    comp = complement(lit)
                    if comp in slong and set(short.literals) - {lit} <= slong - {comp}:
                        found.add((SELF_SUBSUME, (short.id, long.id), comp))


def _canonical(found: set[tuple]) -> list[Candidate]:
    cands = [Candidate(kind, sources, detail) for kind, sources, detail in found]
    cands.sort(key=Candidate.order_key)
    return cands
