import pytest

from wittbox.cli import EXIT_ASSERTION, EXIT_BUDGET, EXIT_OK, EXIT_VALIDATION, main
from wittbox.fixtures import EXAMPLE_41, EXAMPLE_43


@pytest.fixture
def example41(tmp_path):
    path = tmp_path / "example41.ini"
    path.write_text(EXAMPLE_41)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_witt_polys_golden(capsys):
    code, out = run(capsys, "witt-polys", "--p", "2", "--n", "1")
    assert code == EXIT_OK
    assert out == "S0 = X0 + Y0\nS1 = -X0*Y0 + X1 + Y1\n"
    code, out = run(capsys, "witt-polys", "--p", "2", "--n", "1", "--kind", "product")
    assert code == EXIT_OK
    assert out == "M0 = X0*Y0\nM1 = X0^2*Y1 + Y0^2*X1 + 2*X1*Y1\n"


def test_count_command(capsys, example41):
    code, out = run(capsys, "count", example41)
    assert code == EXIT_OK
    assert "cardinality=30\n" in out
    assert "ord_p=1\n" in out
    assert "ord_q=1/1\n" in out


def test_count_stable_across_partitions(capsys, example41):
    _, baseline = run(capsys, "count", example41)
    for parts in ("2", "7", "32"):
        _, out = run(capsys, "count", example41, "--partitions", parts)
        assert out == baseline


def test_verify_pass(capsys, example41):
    code, out = run(capsys, "verify", example41)
    assert code == EXIT_OK
    assert "cardinality=30\n" in out
    assert "bound.general=1\n" in out
    assert "applicable.general=true\n" in out
    assert "verdict.general=PASS\n" in out
    assert "bound.improved=1\n" in out
    assert out.rstrip().endswith("status=PASS")


def test_bound_command_inapplicable_closeness(capsys, tmp_path):
    path = tmp_path / "example43.ini"
    path.write_text(EXAMPLE_43)
    code, out = run(capsys, "bound", str(path))
    assert code == EXIT_OK
    assert "applicable.general=false\n" in out
    assert "closeness violated" in out


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.ini"
    path.write_text("[ring]\np = 2\n")
    code, out = run(capsys, "count", str(path))
    assert code == EXIT_VALIDATION
    assert "error.kind=parse\n" in out
    assert "error.message=" in out


def test_missing_file_exit_code(capsys, tmp_path):
    code, out = run(capsys, "count", str(tmp_path / "nope.ini"))
    assert code == EXIT_VALIDATION
    assert "error.kind=io\n" in out


def test_budget_exit_code(capsys, example41):
    code, out = run(capsys, "count", example41, "--budget", "10")
    assert code == EXIT_BUDGET
    assert "error.kind=budget\n" in out


def test_paper_examples_command(capsys):
    code, out = run(capsys, "paper-examples")
    assert code == EXIT_OK
    assert "example41.cardinality=30\n" in out
    assert "example41.ord_p=1\n" in out
    assert "example42.cardinality=32\n" in out
    assert "example42.ord_p=5\n" in out
    assert "example43.cardinality=30\n" in out
    assert "example43.closeness=false\n" in out
    assert out.count("status=PASS") == 3


def test_verify_fail_exit_code(capsys, tmp_path):
    # under the refuted 'all' reading the frozen counterexample must FAIL
    from test_bounds import FROZEN_COUNTEREXAMPLE

    path = tmp_path / "counterexample.ini"
    path.write_text(FROZEN_COUNTEREXAMPLE)
    code, out = run(capsys, "verify", str(path), "--reading", "all")
    assert code == EXIT_ASSERTION
    assert "verdict.kmr=FAIL\n" in out
    assert out.rstrip().endswith("status=FAIL")
    # the default (literal) reading passes
    code, out = run(capsys, "verify", str(path))
    assert code == EXIT_OK
    assert out.rstrip().endswith("status=PASS")
