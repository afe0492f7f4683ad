import random

import pytest
from hypothesis import given

from sweepsat.core import build_formula
from sweepsat.dimacs import (
    ParseError,
    format_product,
    parse_dimacs,
    variable_names,
    write_dimacs,
)

from conftest import raw_clause_lists


def test_parse_basic():
    f, warnings = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n")
    assert f.n == 3
    assert [c.literals for c in f.clauses] == [(1, 4, 5), (2, 3, 6)]
    assert warnings == []


def test_parse_comments_and_blank_lines():
    text = "c header comment\n\np cnf 2 1\nc mid comment\n1 2 0\n"
    f, warnings = parse_dimacs(text)
    assert [c.literals for c in f.clauses] == [(1, 3)]


def test_parse_clause_spanning_lines():
    f, _ = parse_dimacs("p cnf 3 1\n1\n2\n3 0\n")
    assert [c.literals for c in f.clauses] == [(1, 3, 5)]


def test_width_error_carries_line():
    with pytest.raises(ParseError) as err:
        parse_dimacs("p cnf 4 1\n1 2 3 4 0\n")
    assert err.value.line == 2


def test_width_checked_after_dedup():
    f, _ = parse_dimacs("p cnf 3 1\n1 1 2 3 0\n")
    assert [c.literals for c in f.clauses] == [(1, 3, 5)]


def test_variable_out_of_range():
    with pytest.raises(ParseError) as err:
        parse_dimacs("p cnf 2 1\n1 3 0\n")
    assert err.value.line == 2
    assert "out of range" in err.value.message


def test_malformed_token():
    with pytest.raises(ParseError) as err:
        parse_dimacs("p cnf 2 1\n1 x 0\n")
    assert err.value.line == 2


def test_header_required_and_unique():
    with pytest.raises(ParseError):
        parse_dimacs("1 2 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("p dnf 2 1\n1 0\n")
    # no header at all, even with nothing else, is malformed
    for text in ("", "c just a comment\n", "   \n\n"):
        with pytest.raises(ParseError):
            parse_dimacs(text)


def test_header_count_mismatch_is_warning():
    f, warnings = parse_dimacs("p cnf 2 5\n1 0\n")
    assert any("declares 5" in w.message for w in warnings)
    assert f.m == 1


def test_empty_clause_marks_unsat():
    f, _ = parse_dimacs("p cnf 2 2\n1 2 0\n0\n")
    assert f.has_empty_clause
    assert f.m == 2


def test_unterminated_final_clause_warns():
    f, warnings = parse_dimacs("p cnf 2 1\n1 2\n")
    assert [c.literals for c in f.clauses] == [(1, 3)]
    assert any("not terminated" in w.message for w in warnings)


def test_tautology_warned_and_dropped():
    f, warnings = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n")
    assert [c.literals for c in f.clauses] == [(3,)]
    assert any("tautological" in w.message for w in warnings)


def test_write_round_trip_example():
    f = build_formula(3, [[1, 4, 5], [2, 3, 6]])
    text = write_dimacs(f)
    assert text == "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n"
    g, warnings = parse_dimacs(text)
    assert g.signature() == f.signature()
    assert warnings == []


def test_write_includes_empty_clause_marker():
    f = build_formula(2, [[1, 3], []])
    text = write_dimacs(f)
    assert text.splitlines()[-1] == "0"
    g, _ = parse_dimacs(text)
    assert g.signature() == f.signature()


@given(raw_clause_lists())
def test_round_trip_identity(pair):
    n, clauses = pair
    f = build_formula(n, clauses)
    g, _ = parse_dimacs(write_dimacs(f))
    assert g.signature() == f.signature()
    # a second trip is exact, ids included
    h, _ = parse_dimacs(write_dimacs(g))
    assert h == g


def test_fuzz_smoke_never_crashes():
    rng = random.Random(7)
    alphabet = "0123456789- pc\nnf\tx%"
    for _ in range(2000):
        if rng.random() < 0.5:
            text = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(0, 80))
            )
        else:
            text = bytes(
                rng.randrange(256) for _ in range(rng.randrange(0, 80))
            ).decode("latin-1")
        try:
            parse_dimacs(text)
        except ParseError as exc:
            assert isinstance(exc.line, int)


def test_product_notation():
    f = build_formula(3, [[1, 4, 5], [2, 3, 6]])
    assert format_product(f) == "(A+!B+C).(!A+B+!C)"
    assert format_product(build_formula(2, [])) == "(1)"
    assert format_product(build_formula(2, [[]])) == "(0)"


def test_variable_names_fall_back_past_z():
    names = variable_names(30)
    assert names[0] == "x1" and names[29] == "x30"
