import pytest

from sweepsat.cli import main
from sweepsat.dimacs import write_dimacs
from sweepsat.gen import GenConfig, gen_complete_signs, gen_random


@pytest.fixture
def sat_file(tmp_path):
    path = tmp_path / "sat.cnf"
    path.write_text("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    return str(path)


@pytest.fixture
def unsat_reduced_file(tmp_path):
    path = tmp_path / "unsat.cnf"
    path.write_text(write_dimacs(gen_complete_signs()))
    return str(path)


@pytest.fixture
def unsat_missed_file(tmp_path):
    path = tmp_path / "missed.cnf"
    path.write_text(write_dimacs(gen_random(GenConfig(4, 18, seed=14))))
    return str(path)


def test_solve_sat(sat_file, capsys):
    assert main(["solve", sat_file]) == 10
    out = capsys.readouterr().out
    assert "s SATISFIABLE" in out
    assert any(l.startswith("v ") for l in out.splitlines())


def test_solve_unsat_by_reduction(unsat_reduced_file, capsys):
    assert main(["solve", unsat_reduced_file]) == 20
    out = capsys.readouterr().out
    assert "c reason=reduction" in out
    assert "s UNSATISFIABLE" in out


def test_solve_unsat_by_exhaustion(unsat_missed_file, capsys):
    assert main(["solve", unsat_missed_file]) == 20
    out = capsys.readouterr().out
    assert "c reason=exhaustion" in out
    assert "s UNSATISFIABLE" in out


def test_solve_budget_unknown(unsat_missed_file, capsys):
    assert main(["solve", unsat_missed_file, "--budget", "3"]) == 30
    assert "s UNKNOWN" in capsys.readouterr().out


def test_solve_trace_written(sat_file, tmp_path, capsys):
    trace_path = tmp_path / "trace.log"
    assert main(["solve", sat_file, "--trace", str(trace_path)]) == 10
    capsys.readouterr()
    assert trace_path.exists()


def test_enumerate_lists_branches(sat_file, capsys):
    assert main(["enumerate", sat_file, "--limit", "50"]) == 10
    out = capsys.readouterr().out
    assert "complete=true" in out
    assert sum(1 for l in out.splitlines() if l.startswith("v ")) >= 2


def test_enumerate_unsat(unsat_missed_file, capsys):
    assert main(["enumerate", unsat_missed_file]) == 20
    out = capsys.readouterr().out
    assert "c reason=exhaustion" in out


def test_reduce_prints_product_and_dimacs(unsat_reduced_file, capsys):
    assert main(["reduce", unsat_reduced_file]) == 0
    out = capsys.readouterr().out
    assert "c status=contradiction" in out
    assert "c product" in out
    assert "p cnf" in out


def test_reduce_backend_choice(sat_file, capsys):
    assert main(["reduce", sat_file, "--backend", "pairwise"]) == 0
    capsys.readouterr()


def test_oracle_sat(sat_file, capsys):
    assert main(["oracle", sat_file]) == 10
    out = capsys.readouterr().out
    assert "method=table" in out
    assert "s SATISFIABLE" in out


def test_oracle_unsat(unsat_reduced_file, capsys):
    assert main(["oracle", unsat_reduced_file]) == 20
    assert "models=0" in capsys.readouterr().out


def test_oracle_backtracking_method(sat_file, capsys):
    assert main(["oracle", sat_file, "--method", "backtracking"]) == 10
    assert "method=backtracking" in capsys.readouterr().out


def test_cases_exit_zero(capsys):
    assert main(["cases"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("config r4=off")
    assert "summary equalities_ok=true" in out


def test_cases_r4_flag(capsys):
    assert main(["cases", "--enable-r4"]) == 0
    assert "config r4=on" in capsys.readouterr().out


def test_gen_random_to_file(tmp_path, capsys):
    out_path = tmp_path / "gen.cnf"
    assert main(["gen", "--n", "6", "--m", "20", "--seed", "5",
                 "--out", str(out_path)]) == 0
    capsys.readouterr()
    text = out_path.read_text()
    assert text.startswith("p cnf 6 20\n") or "p cnf 6 20" in text


def test_gen_ratio(capsys):
    assert main(["gen", "--n", "10", "--ratio", "4.3"]) == 0
    assert "p cnf 10 43" in capsys.readouterr().out


def test_gen_complete_signs(capsys):
    assert main(["gen", "--family", "complete-signs"]) == 0
    assert "p cnf 3 8" in capsys.readouterr().out


def test_gen_missing_args_is_usage_error(capsys):
    assert main(["gen"]) == 1
    assert "error:" in capsys.readouterr().err


def test_gen_overfull_request_is_usage_error(capsys):
    assert main(["gen", "--n", "3", "--m", "9"]) == 1
    capsys.readouterr()


def test_harness_smoke(capsys, tmp_path):
    out_dir = tmp_path / "audit"
    code = main(["harness", "--n-list", "4", "--ratios", "3.0,5.0",
                 "--count", "4", "--seed", "7", "--out", str(out_dir)])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("config instances=8 seed=7")
    assert "summary total=8" in out
    assert (out_dir / "report.txt").exists()


def test_bench_generated(capsys):
    assert main(["bench", "--n", "5", "--m", "20", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "sweep 1 backend=sorted" in out
    assert "records_ok=true" in out
    assert "eliminations_ok=true" in out
    assert "cubic_reference=8000" in out


def test_bench_needs_input(capsys):
    assert main(["bench"]) == 1
    capsys.readouterr()


def test_missing_file_is_usage_error(capsys):
    assert main(["solve", "/nonexistent/path.cnf"]) == 1
    assert "error:" in capsys.readouterr().err


def test_malformed_file_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 2 1\n1 -9 0\n")
    assert main(["solve", str(bad)]) == 1
    capsys.readouterr()


def test_unknown_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_no_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1
    capsys.readouterr()
