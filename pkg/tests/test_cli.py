import json
import subprocess
import sys

import pytest

from freetoeplitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_form_default_weights(capsys):
    code, out = run(capsys, "form", "t1", "t1*t2*b2", "--n", "2")
    assert code == 0
    assert out.strip() == "1"


def test_form_with_mu(capsys):
    code, out = run(capsys, "form", "t1", "t1*t2*b2", "--n", "2", "--mu", "2,3")
    assert code == 0
    assert out.strip() == "6"


def test_form_complex_output(capsys):
    code, out = run(capsys, "form", "i*t1", "t1", "--n", "1")
    assert code == 0
    assert out.strip() == "-i"


def test_project(capsys):
    code, out = run(capsys, "project", "t1*b1 + t1", "--n", "2")
    assert code == 0
    assert out.strip() == "1 + t1"


def test_toeplitz(capsys):
    code, out = run(
        capsys, "toeplitz", "--symbol", "b2*t1*b1", "--arg", "t1*t2", "--n", "2"
    )
    assert code == 0
    assert out.strip() == "t1"


def test_matrix_csv(capsys):
    code, out = run(
        capsys, "matrix", "--symbol", "t1", "--degree", "1", "--n", "2"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "row,col,re,im"
    assert len(lines) == 2


def test_matrix_json_to_file(tmp_path, capsys):
    out_file = tmp_path / "m.json"
    code, _ = run(
        capsys,
        "matrix",
        "--symbol",
        "t1",
        "--degree",
        "2",
        "--format",
        "json",
        "--n",
        "2",
        "--out",
        str(out_file),
    )
    assert code == 0
    obj = json.loads(out_file.read_text())
    assert obj["order"] == "graded-lex"
    assert obj["symbol"] == "t1"
    assert obj["L"] == 2


def test_check_counterexamples(capsys):
    code, out = run(capsys, "check", "--suite", "counterexamples", "--n", "2")
    assert code == 0
    assert "(1, 0, 1, 0)" in out


def test_check_counterexamples_needs_n2(capsys):
    code = main(["check", "--suite", "counterexamples", "--n", "1"])
    assert code == 1


def test_check_symmetry(capsys):
    code, out = run(
        capsys, "check", "--suite", "symmetry", "--n", "2", "--trials", "50"
    )
    assert code == 0
    assert "0 violations" in out


def test_check_adjoint(capsys):
    code, out = run(
        capsys, "check", "--suite", "adjoint", "--n", "2", "--trials", "100"
    )
    assert code == 0


def test_check_compat_small(capsys):
    code, out = run(
        capsys, "check", "--suite", "compat", "--n", "2", "--max-len", "3"
    )
    assert code == 0
    assert "violations" in out


def test_scan(capsys):
    code, out = run(capsys, "scan", "t1*t2*b2*b1", "--algorithm", "left-right")
    assert code == 0
    assert out.strip() == "1"


def test_scan_zero(capsys):
    code, out = run(capsys, "scan", "b1*t1", "--algorithm", "left-right")
    assert code == 0
    assert out.strip() == "0"


def test_scan_trace(capsys):
    code, out = run(
        capsys, "scan", "t1*t2*b1", "--algorithm", "left-right", "--trace"
    )
    assert code == 0
    assert out.splitlines() == ["bar@2 theta@0", "t2"]


def test_scan_random(capsys):
    code, out = run(
        capsys,
        "scan",
        "t1*b1",
        "--algorithm",
        "random",
        "--p",
        "1.0",
        "--seed",
        "3",
    )
    assert code == 0
    assert out.strip() == "1"


def test_weights_file(tmp_path, capsys):
    cfg = tmp_path / "weights.txt"
    cfg.write_text("mu = 2, 3\n")
    code, out = run(
        capsys, "form", "t1", "t1", "--n", "2", "--weights", str(cfg)
    )
    assert code == 0
    assert out.strip() == "2"


def test_malformed_expression_exits_2():
    assert main(["form", "t1 +", "t1", "--n", "2"]) == 2
    assert main(["project", "qq", "--n", "2"]) == 2


def test_domain_error_exits_1():
    assert main(["form", "t1", "t1", "--n", "2", "--mu", "2"]) == 1


def test_usage_error_exits_2_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "freetoeplitz.cli", "bogus"],
        capture_output=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "freetoeplitz.cli", "check", "--suite", "nope"],
        capture_output=True,
    )
    assert proc.returncode == 2


def test_entry_point_help_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "freetoeplitz.cli", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "fta" in proc.stdout
