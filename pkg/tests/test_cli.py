import json
import math
import shutil
import subprocess

import pytest

from galog.cli.main import (
    EXIT_NONEXISTENT, EXIT_OK, EXIT_SINGULAR, EXIT_USAGE, EXIT_VERIFY, ROUNDTRIP_THRESHOLD, main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, (json.loads(out) if out.strip() else None), err


def test_log_json_schema(capsys):
    code, doc, _ = run_json(capsys, "log", "-2 + e1 + e23 - 3e123", "--residual")
    assert code == EXIT_OK
    assert set(doc) >= {"algebra", "op", "input", "branch", "outcome", "residual"}
    out = doc["outcome"]
    assert set(out) >= {"exists", "coeffs", "lambda_coeffs", "case_row", "free_family"}
    assert out["exists"] and out["lambda_coeffs"] == [0.0] * 8
    assert out["coeffs"][0] == pytest.approx(3 * math.log(5) / 4, abs=1e-12)
    assert "cl30.AI.generic" in out["case_row"]
    assert doc["residual"] < 1e-12
    assert doc["branch"]["c1_plus"] == 0


def test_text_output(capsys):
    code, out, _ = run(capsys, "log", "1 - 2e123")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "0.8047189562 - 1.107148718*e123"
    assert out.splitlines()[1].startswith("rows: ")


def test_negative_leading_literal(capsys):
    code, doc, _ = run_json(capsys, "exp", "-1", "--algebra", "cl03")
    assert code == EXIT_OK and doc["outcome"]["coeffs"][0] == pytest.approx(math.exp(-1))


def test_nonexistent_exit(capsys):
    code, doc, _ = run_json(capsys, "log", "e1 + e12")
    assert code == EXIT_NONEXISTENT and not doc["outcome"]["exists"] and doc["outcome"]["reason"]
    code, _, _ = run_json(capsys, "log", "e1 - 2e23", "--algebra", "cl21")
    assert code == EXIT_NONEXISTENT


def test_singular_exit(capsys):
    code, doc, _ = run_json(capsys, "log", "1 + e1")
    assert code == EXIT_SINGULAR
    assert any(doc["outcome"]["lambda_coeffs"])
    code, _, err = run(capsys, "pow", "1 + e1", "--r", "1/2")
    assert code == EXIT_SINGULAR and "singular" in err


@pytest.mark.parametrize("argv", [
    ["log", "e1 e2"], ["log", "e4"], ["log", "1", "--algebra", "cl22"], ["log", "1", "--branch", "c9=1"],
    ["pow", "e1", "--r", "a/b"], ["fn", "e1", "--name", "sin", "--algebra", "cl03"], ["nope"],
    ["roundtrip", "--seed", "1", "--count", "0"], ["log", "1", "--tol", "-1"], ["log", "1", "--free-vec", "1,2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_pow_and_fn(capsys):
    code, doc, _ = run_json(capsys, "pow", "-1 + e3 - e12 + 1/2 I", "--r", "1/2")
    assert code == EXIT_OK
    assert doc["outcome"]["coeffs"] == pytest.approx([0, 0, 0, 0.5, 0.5, 0, 0, -1], abs=1e-12)
    code, doc, _ = run_json(capsys, "fn", "0.3e1", "--name", "sinh", "--algebra", "cl03")
    assert doc["outcome"]["coeffs"][1] == pytest.approx(math.sin(0.3))


def test_det_norm_series(capsys):
    code, doc, _ = run_json(capsys, "det", "2")
    assert doc["outcome"]["value_scalar"] == pytest.approx(16)
    code, doc, _ = run_json(capsys, "norm", "2")
    assert doc["outcome"]["value_scalar"] == pytest.approx(2)
    code, doc, _ = run_json(capsys, "series-log", "-9/10 - 1/3 e3", "--algebra", "cl03")
    assert code == EXIT_OK and doc["outcome"]["converged"] is False


def test_branch_and_directions(capsys):
    _, base, _ = run_json(capsys, "log", "1 - 2e123")
    _, shifted, _ = run_json(capsys, "log", "1 - 2e123", "--branch", "c2p=1")
    assert shifted["outcome"]["coeffs"][7] - base["outcome"]["coeffs"][7] == pytest.approx(2 * math.pi)
    _, d, _ = run_json(capsys, "log", "-e3 + e12 + 4I", "--algebra", "cl03", "--free-vec", "0,1,0")
    assert d["branch"]["free_vector"] == [0.0, 1.0, 0.0] and d["outcome"]["coeffs"][2] != 0


def test_tol_flag(capsys):
    _, d, _ = run_json(capsys, "log", "3 + 0.000000001e1 + I", "--algebra", "cl03", "--tol", "1e-6")
    assert "cl03.plus.a0.s>0" in d["outcome"]["case_row"]


def test_min_sheet(capsys):
    code, d, _ = run_json(capsys, "min-sheet", "-2 + e1 - 3e2 + 8e3 + 4e12 - 9e13 + 6e23 - 6I", "--cmax", "1")
    assert code == EXIT_OK and d["outcome"]["best_norm"] < d["outcome"]["principal_norm"]


def test_roundtrip_command(capsys):
    code, d, _ = run_json(capsys, "roundtrip", "--algebra", "cl03", "--count", "50", "--seed", "3")
    assert code == EXIT_OK
    assert d["rejection_rate"] == 0 and d["max_residual"] < ROUNDTRIP_THRESHOLD
    _, again, _ = run_json(capsys, "roundtrip", "--algebra", "cl03", "--count", "50", "--seed", "3")
    assert again == d
    code, d, _ = run_json(capsys, "roundtrip", "--algebra", "cl21", "--count", "50", "--seed", "3")
    assert code == EXIT_OK and d["drawn"] == 50 + d["rejected"] + d["singular"]
    assert EXIT_VERIFY == 5


def test_help(capsys):
    assert main(["--help"]) == EXIT_OK


@pytest.mark.skipif(shutil.which("galog") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["galog", "log", "-2+e1+e23-3e123"], capture_output=True, text=True)
    assert p.returncode == 0 and "e123" in p.stdout
