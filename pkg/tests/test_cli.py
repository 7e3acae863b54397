import json

import pytest

from dowling.cli.main import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--m", "2", "--r", "1", "--max-n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["n", "k", "value"]
    assert [line.split() for line in lines[-2:]] == [["2", "1", "4"], ["2", "2", "1"]]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "table", "--m", "1", "--r", "0", "--max-n", "3")
    assert code == 0
    assert out.splitlines()[0] == "n,k,value"
    assert "3,2,3" in out.splitlines()


def test_table_csv_quotes_rationals(capsys):
    code, out, _ = run(capsys, "table", "--m", "1", "--r", "1/2", "--max-n", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ['0,0,1', '1,0,"1/2"', '1,1,1']


def test_table_json_lines(capsys):
    code, out, _ = run(capsys, "table", "--m", "2", "--r", "1", "--max-n", "1", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1] == {"n": 1, "k": 1, "value": "1"}
    assert len(records) == 3


def test_table_rejects_zero_m(capsys):
    code, _, err = run(capsys, "table", "--m", "0", "--r", "1", "--max-n", "2")
    assert code == 2
    assert "m must be nonzero" in err


def test_table_requires_max_n(capsys):
    code, _, _ = run(capsys, "table", "--m", "2")
    assert code == 2


@pytest.mark.parametrize("argv, expected", [
    (["--m", "2", "--r", "1", "--n", "2", "--x", "2", "--y", "1"], "11"),
    (["--m", "1", "--r", "0", "--n", "3", "--x", "1", "--y", "1"], "1"),
    (["--m", "2", "--r", "1", "--n", "2", "--x", "2", "--y", "1", "--explicit"], "11"),
    (["--m", "2", "--r", "1", "--n", "2", "--x", "1/2", "--y", "1"], "11/4"),
])
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0
    assert out == expected + "\n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--m", "2", "--r", "1", "--n", "2", "--x", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"m": "2", "r": "1", "n": 2, "coeffs": ["1", "4", "1"],
                               "x": "2", "y": "1", "value": "11"}


@pytest.mark.parametrize("argv", [
    ["--m", "2", "--n", "2", "--x", "1/2", "--explicit"],
    ["--m", "2", "--n", "-1"],
    ["--m", "2/0", "--n", "1"],
])
def test_eval_errors(capsys, argv):
    code, _, _ = run(capsys, "eval", *argv)
    assert code == 2


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--kind", "ogf-pf", "--m", "2", "--r", "1",
                       "--x", "1", "--y", "1", "--order", "3")
    assert code == 0
    assert out == "1, 2, 5, 14\n"


def test_series_exponential_of_zero(capsys):
    code, out, _ = run(capsys, "series", "--kind", "egf", "--m", "1", "--r", "0",
                       "--x", "0", "--y", "1", "--order", "2")
    assert code == 0
    assert out == "1, 0, 0\n"


def test_series_refuses_y_equal_m(capsys):
    code, _, err = run(capsys, "series", "--kind", "ogf-2f1", "--m", "2", "--r", "1", "--x", "1", "--y", "2")
    assert code == 2
    assert "error" in err


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--kind", "whitney-ogf", "--m", "2", "--r", "1",
                       "--k", "1", "--order", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == ["0", "1", "4", "13"]


def test_oracle(capsys):
    assert run(capsys, "oracle", "--n", "3", "--k", "2", "--r", "0")[:2] == (0, "3 (match)\n")
    assert run(capsys, "oracle", "--n", "0", "--k", "0", "--r", "0")[:2] == (0, "1 (match)\n")


def test_oracle_guard(capsys):
    code, _, err = run(capsys, "oracle", "--n", "10", "--k", "3", "--r", "3")
    assert code == 2
    assert "limited" in err


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "spivey-classic")
    assert code == 0
    assert out.splitlines()[1].split()[0] == "spivey-classic"
    assert out.splitlines()[-1].endswith("0 failed")


def test_verify_json_with_grid(capsys, tmp_path):
    grid = tmp_path / "grid.cfg"
    grid.write_text("m-list=1,2\nr-list=0,1\nsum-budget=2\nx-max=1\ny-list=1/2\nseries-order=3\n")
    code, out, _ = run(capsys, "verify", "--grid", str(grid), "--only", "mezo-r1,bell-rec",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert [s["identity_id"] for s in report["summaries"]] == ["mezo-r1", "bell-rec"]
    assert report["failures"] == 0
    assert "wall_time" not in report


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--only", "spivey-classic", "--zero-power", "0")
    assert code == 1
    assert "first failure of spivey-classic: l=0, n=0: lhs=1 rhs=0" in out


def test_verify_missing_grid(capsys):
    code, _, err = run(capsys, "verify", "--grid", "missing.cfg")
    assert code == 2
    assert "missing.cfg" in err


def test_verify_unknown_identity(capsys):
    code, _, _ = run(capsys, "verify", "--only", "nope")
    assert code == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "--output", str(target), "--format", "csv",
                       "table", "--m", "1", "--max-n", "1")
    assert code == 0
    assert out == ""
    assert target.read_text() == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n"



def test_refused_command_writes_no_file(capsys, tmp_path):
    target = tmp_path / "series.txt"
    code, _, err = run(capsys, "--output", str(target), "series", "--kind", "ogf-2f1",
                       "--m", "2", "--r", "1", "--x", "1", "--y", "2", "--order", "3")
    assert code == 2
    assert "error" in err
    assert not target.exists()


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 2


def test_output_is_stable(capsys):
    first = run(capsys, "table", "--m", "3", "--r", "1/2", "--max-n", "4")
    second = run(capsys, "table", "--m", "3", "--r", "1/2", "--max-n", "4")
    assert first == second
