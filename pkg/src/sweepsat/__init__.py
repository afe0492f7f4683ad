"""Sort-and-sweep study kit for 3-CNF formulas.

The pipeline: encode clauses as sorted integer tuples, expand every clause
into its literal permutations, mergesort the records, harvest reduction
candidates from adjacent runs, sweep to a fixpoint, then enumerate the
satisfying branches of whatever survives.  A truth-table oracle, a
case-by-case audit, and a differential harness measure how much of the
"reduction spots every unsatisfiable formula" story actually holds.
"""

from .core import (
    Assignment,
    Clause,
    CnfError,
    Formula,
    RewriteStep,
    build_formula,
    build_formula_traced,
    complement,
    encode_literal,
    evaluate,
    normalize_clause,
    variable_of,
)
from .dimacs import Diagnostic, ParseError, format_product, parse_dimacs, write_dimacs
from .engine import (
    IrreducibleForm,
    ReductionStatus,
    ReductionTrace,
    reduce_to_fixpoint,
    replay_trace,
    sweep,
)
from .expand import Branch, SearchKind, SearchOutcome, count_branch_models, expand
from .gen import GenConfig, gen_complete_signs, gen_random
from .harness import run_differential, run_one
from .oracle import (
    OracleResult,
    backtracking_solve,
    equivalent,
    truth_table_solve,
)
from .cases import run_case_suite

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "Branch",
    "Clause",
    "CnfError",
    "Diagnostic",
    "Formula",
    "GenConfig",
    "IrreducibleForm",
    "OracleResult",
    "ParseError",
    "ReductionStatus",
    "ReductionTrace",
    "RewriteStep",
    "SearchKind",
    "SearchOutcome",
    "backtracking_solve",
    "build_formula",
    "build_formula_traced",
    "complement",
    "count_branch_models",
    "encode_literal",
    "equivalent",
    "evaluate",
    "expand",
    "format_product",
    "gen_complete_signs",
    "gen_random",
    "normalize_clause",
    "parse_dimacs",
    "reduce_to_fixpoint",
    "replay_trace",
    "run_case_suite",
    "run_differential",
    "run_one",
    "sweep",
    "truth_table_solve",
    "variable_of",
    "write_dimacs",
]
