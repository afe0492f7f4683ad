"""Shared strategies and corpus helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from sweepsat.core import Formula, build_formula


@st.composite
def raw_clause_lists(draw, max_n=8, max_m=12, widths=(1, 2, 3)):
    """(n, raw clause list) pairs; clauses may duplicate each other."""
    n = draw(st.integers(min_value=3, max_value=max_n))
    m = draw(st.integers(min_value=0, max_value=max_m))
    clauses = []
    for _ in range(m):
        w = draw(st.sampled_from(widths))
        vars_ = draw(
            st.lists(
                st.integers(min_value=1, max_value=n),
                min_size=w,
                max_size=w,
                unique=True,
            )
        )
        clause = tuple(
            2 * v - 1 + draw(st.integers(min_value=0, max_value=1)) for v in vars_
        )
        clauses.append(clause)
    return n, clauses


@st.composite
def formulas(draw, max_n=8, max_m=12, widths=(1, 2, 3)) -> Formula:
    n, clauses = draw(raw_clause_lists(max_n=max_n, max_m=max_m, widths=widths))
    return build_formula(n, clauses)


def random_raw_clauses(rng: random.Random, n: int, m: int, widths=(3,)):
    """Plain-random clause sampler, independent of the package generator."""
    clauses = []
    for _ in range(m):
        w = rng.choice(widths)
        vars_ = rng.sample(range(1, n + 1), w)
        clauses.append(tuple(2 * v - 1 + rng.randint(0, 1) for v in vars_))
    return clauses


def random_formula(rng: random.Random, n: int, m: int, widths=(3,)) -> Formula:
    return build_formula(n, random_raw_clauses(rng, n, m, widths))
