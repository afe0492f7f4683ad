"""DIMACS CNF reading/writing plus product-notation pretty printing.

The parser is whitespace-tolerant and never crashes on garbage: every
rejected input raises ParseError carrying the offending line number, and
recoverable oddities are reported as warnings next to the parsed formula.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .core import (
    CnfError,
    Formula,
    WidthExceededError,
    build_formula,
    from_dimacs,
    is_negated,
    normalize_clause,
    to_dimacs,
    variable_of,
)


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


class ParseError(CnfError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def parse_dimacs(text: str) -> tuple[Formula, list[Diagnostic]]:
    """Parse DIMACS CNF text into a Formula plus warning diagnostics.

    Raises ParseError (with a line number) on malformed tokens, a missing
    or repeated header, clauses wider than three distinct literals, or
    variables beyond the declared count.
    """
    warnings: list[Diagnostic] = []
    n_declared = -1
    m_declared = -1
    raw_clauses: list[list[int]] = []
    clause_lines: list[int] = []
    current: list[int] = []
    current_line = 0

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if n_declared >= 0:
                raise ParseError(lineno, "duplicate header")
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(lineno, f"malformed header {stripped!r}")
            try:
                n_declared = int(parts[2])
                m_declared = int(parts[3])
            except ValueError:
                raise ParseError(lineno, f"non-numeric header field in {stripped!r}")
            if n_declared < 0 or m_declared < 0:
                raise ParseError(lineno, "negative count in header")
            continue
        if n_declared < 0:
            raise ParseError(lineno, "clause data before 'p cnf' header")
        for token in stripped.split():
            try:
                value = int(token)
            except ValueError:
                raise ParseError(lineno, f"malformed token {token!r}")
            if current_line == 0:
                current_line = lineno
            if value == 0:
                raw_clauses.append(current)
                clause_lines.append(current_line)
                current = []
                current_line = 0
                continue
            if abs(value) > n_declared:
                raise ParseError(
                    lineno,
                    f"variable {abs(value)} out of range, header declares {n_declared}",
                )
            current.append(from_dimacs(value))

    if n_declared < 0:
        raise ParseError(0, "missing 'p cnf' header")
    if current:
        warnings.append(
            Diagnostic(current_line, "final clause not terminated by 0; accepted")
        )
        raw_clauses.append(current)
        clause_lines.append(current_line)

    for raw, line in zip(raw_clauses, clause_lines):
        try:
            lits = normalize_clause(raw)
        except WidthExceededError as exc:
            raise ParseError(line, str(exc))
        if lits is None:
            warnings.append(Diagnostic(line, "tautological clause dropped"))

    formula = build_formula(n_declared, raw_clauses)
    if len(raw_clauses) != m_declared:
        warnings.append(
            Diagnostic(
                0, f"header declares {m_declared} clauses, found {len(raw_clauses)}"
            )
        )
    return formula, warnings


def write_dimacs(formula: Formula) -> str:
    """Render a formula back to DIMACS; inverse of parse_dimacs on its output."""
    lines = [f"p cnf {formula.n} {formula.m}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(to_dimacs(lit)) for lit in clause.literals) + " 0")
    if formula.has_empty_clause:
        lines.append("0")
    return "\n".join(lines) + "\n"


def variable_names(n: int) -> list[str]:
    """Single letters A.. for small n, x1.. otherwise."""
    if n <= 26:
        return list(string.ascii_uppercase[:n])
    return [f"x{i}" for i in range(1, n + 1)]


def format_literal(lit: int, names: list[str]) -> str:
    name = names[variable_of(lit) - 1]
    return f"!{name}" if is_negated(lit) else name


def format_product(formula: Formula, names: list[str] | None = None) -> str:
    """Product notation: (A+B+!C).(!A+D) with '.' for AND, '+' for OR."""
    if names is None:
        names = variable_names(formula.n)
    parts = [
        "(" + "+".join(format_literal(lit, names) for lit in c.literals) + ")"
        for c in formula.clauses
    ]
    if formula.has_empty_clause:
        parts.append("(0)")
    return ".".join(parts) if parts else "(1)"
