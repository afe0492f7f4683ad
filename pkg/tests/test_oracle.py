import random
from itertools import product

import pytest
from hypothesis import given, settings

from sweepsat.core import Assignment, build_formula, evaluate
from sweepsat.gen import gen_complete_signs
from sweepsat.oracle import (
    SAT,
    UNSAT,
    TooLargeError,
    backtracking_solve,
    equivalent,
    formula_mask,
    truth_table_solve,
    variable_masks,
)

from conftest import formulas, random_formula


def test_variable_masks_two_vars():
    masks = variable_masks(2)
    # assignment index 0b00..0b11, variable 1 is the high bit
    assert masks == (0b1100, 0b1010)


def test_variable_masks_shape():
    masks = variable_masks(4)
    assert len(masks) == 4
    universe = (1 << 16) - 1
    for m in masks:
        assert m.bit_count() == 8
        assert 0 < m < universe


def brute_force_count(f):
    count = 0
    for bits in product((False, True), repeat=f.n):
        if evaluate(f, Assignment(bits)):
            count += 1
    return count


@settings(max_examples=150)
@given(formulas(max_n=6, max_m=10))
def test_count_matches_brute_force(f):
    result = truth_table_solve(f)
    assert result.model_count == brute_force_count(f)
    assert (result.verdict == SAT) == (result.model_count > 0)


def test_known_counts():
    assert truth_table_solve(build_formula(3, [[1, 3, 5]])).model_count == 7
    assert truth_table_solve(build_formula(2, [])).model_count == 4
    assert truth_table_solve(gen_complete_signs()).model_count == 0
    assert truth_table_solve(build_formula(2, [[1, 3], []])).verdict == UNSAT


def test_witness_is_first_in_lexicographic_order():
    # all-false already satisfies (!A)
    r = truth_table_solve(build_formula(2, [[2]]))
    assert r.witness == Assignment((False, False))
    # (A) forces A true; B stays at its first value
    r = truth_table_solve(build_formula(2, [[1]]))
    assert r.witness == Assignment((True, False))
    # (A+B): first model is A=F, B=T
    r = truth_table_solve(build_formula(2, [[1, 3]]))
    assert r.witness == Assignment((False, True))


@settings(max_examples=150)
@given(formulas(max_n=7))
def test_witness_verifies(f):
    r = truth_table_solve(f)
    if r.verdict == SAT:
        assert evaluate(f, r.witness)
    else:
        assert r.witness is None and r.model_count == 0


@settings(max_examples=150)
@given(formulas(max_n=7))
def test_backtracking_agrees_with_table(f):
    table = truth_table_solve(f)
    back = backtracking_solve(f)
    assert table.verdict == back.verdict
    if back.verdict == SAT:
        assert evaluate(f, back.witness)


def test_backtracking_agreement_seeded_bulk():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(3, 13)
        f = random_formula(rng, n, rng.randrange(1, 5 * n), (1, 2, 3))
        assert truth_table_solve(f).verdict == backtracking_solve(f).verdict


def test_equivalence_invariants():
    f = build_formula(3, [[1, 3, 5], [2, 4]])
    with_dup = build_formula(3, [[1, 3, 5], [2, 4], [1, 3, 5]])
    with_taut = build_formula(3, [[1, 3, 5], [2, 4], [5, 6]])
    assert equivalent(f, with_dup)
    assert equivalent(f, with_taut)
    assert not equivalent(f, build_formula(3, [[1, 3, 5]]))


def test_equivalence_spans_variable_union():
    # same constraint, declared over different variable counts
    f1 = build_formula(2, [[1, 3]])
    f2 = build_formula(4, [[1, 3]])
    assert equivalent(f1, f2)
    assert not equivalent(f1, build_formula(4, [[1, 3], [7]]))


def test_table_cap():
    f = build_formula(25, [[1, 3, 5]])
    with pytest.raises(TooLargeError):
        truth_table_solve(f)
    with pytest.raises(TooLargeError):
        equivalent(f, f)
    # backtracking has no such cap
    assert backtracking_solve(f).verdict == SAT


def test_formula_mask_widening():
    f = build_formula(2, [[1]])
    assert formula_mask(f).bit_count() == 2
    assert formula_mask(f, 3).bit_count() == 4


def test_empty_formula_and_zero_vars():
    f = build_formula(0, [])
    r = truth_table_solve(f)
    assert r.verdict == SAT and r.model_count == 1 and r.witness == Assignment(())
    assert backtracking_solve(f).verdict == SAT
