"""Seeded random 3-CNF generation and the complete-signs family.

Random instances draw from a PCG64 stream, so an (n, m, seed) triple
always yields the same formula, across runs and platforms.  Clauses
have three distinct variables with independent signs; duplicate clauses
are resampled so the formula really contains m distinct clauses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from .core import CnfError, Formula, build_formula, encode_literal


class GenerationError(CnfError):
    """Unsatisfiable generation request (too few variables, m too large)."""


class UnsupportedFamilyError(CnfError):
    """The structured family is only defined for width 3."""


@dataclass(frozen=True)
class GenConfig:
    n: int
    m: int
    seed: int

    @classmethod
    def from_ratio(cls, n: int, ratio: float, seed: int) -> "GenConfig":
        return cls(n, max(1, round(ratio * n)), seed)


def gen_random(config: GenConfig) -> Formula:
    """Deterministic random 3-CNF with m distinct width-3 clauses."""
    n, m, seed = config.n, config.m, config.seed
    if n < 3:
        raise GenerationError(f"width-3 clauses need n >= 3, got {n}")
    max_clauses = 8 * n * (n - 1) * (n - 2) // 6
    if m > max_clauses:
        raise GenerationError(
            f"cannot draw {m} distinct clauses over {n} variables (max {max_clauses})"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    seen: set[tuple[int, ...]] = set()
    clauses: list[tuple[int, ...]] = []
    while len(clauses) < m:
        vars_ = rng.choice(n, size=3, replace=False)
        signs = rng.integers(0, 2, size=3)
        clause = tuple(
            sorted(
                encode_literal(int(v) + 1, bool(s))
                for v, s in zip(vars_, signs)
            )
        )
        if clause in seen:
            continue
        seen.add(clause)
        clauses.append(clause)
    return build_formula(n, clauses)


def gen_complete_signs(k: int = 3) -> Formula:
    """All 2^k sign patterns over k fixed variables; unsatisfiable by design."""
    if k != 3:
        raise UnsupportedFamilyError(f"complete-signs is defined for k=3, got {k}")
    clauses = [
        tuple(encode_literal(v, bool(s)) for v, s in zip((1, 2, 3), signs))
        for signs in product((0, 1), repeat=3)
    ]
    return build_formula(3, clauses)


def instance_seed(base_seed: int, index: int) -> int:
    """Stable per-instance seed; stays within 63 bits."""
    return (base_seed * 1_000_003 + index) % (1 << 63)
