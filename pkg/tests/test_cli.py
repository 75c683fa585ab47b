import io
import json
import subprocess
import sys

import pytest

from orelim.cli import main
from orelim.infmat import DenseMinor


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_catalog_json():
    code, text = run("catalog", "--name", "M0_tilde", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(text)["entries"] == [["x - 1", "x + 1"], ["x^2 - 1", "2*x^2 + 2"]]
    code, text = run("catalog", "--name", "identity", "--n", "1")
    assert json.loads(text)["entries"] == [["1"]]


def test_catalog_pretty_and_csv():
    code, text = run("catalog", "--name", "T0_inv", "--n", "3", "--format", "pretty")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 3 and "x^2 + x + 1" in lines[2]
    code, text = run("catalog", "--name", "P", "--n", "3", "--format", "csv")
    assert text.splitlines() == ["1,0,0", "1,1,0", "1,2,1"]


@pytest.mark.parametrize("name", ["M0_tilde", "U0_tilde", "Lp_inv_tilde", "S"])
def test_json_byte_round_trip(name):
    _, text = run("catalog", "--name", name, "--n", "5")
    text = text.strip()
    back_name, m = DenseMinor.from_json(text)
    assert m.to_json(back_name) == text


def test_catalog_unknown_name(capsys):
    code, _ = run("catalog", "--name", "nope", "--n", "2")
    assert code == 2
    assert "unknown matrix" in capsys.readouterr().err


def test_usage_errors():
    assert run("catalog", "--name", "P", "--n", "0")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("ore-residual", "--poly", "1", "--c", "x", "--n", "1")[0] == 2


def test_lu():
    code, text = run("lu", "--name", "M0_tilde", "--n", "3")
    assert code == 0
    obj = json.loads(text)
    assert obj["L"] == [["1", "0", "0"], ["x + 1", "1", "0"], ["x^2 + x + 1", "2*x + 2", "1"]]
    assert obj["U"][2][2] == "2*x^3 - 6*x^2 + 6*x - 2"
    code, text = run("lu", "--name", "V", "--n", "4")
    obj = json.loads(text)
    assert obj["L"][3] == ["1", "3", "3", "1"]
    assert obj["U"][3] == ["0", "0", "0", "6"]
    code, text = run("lu", "--name", "identity", "--n", "5", "--format", "pretty")
    assert code == 0 and text.startswith("L =")


def test_lu_singular(capsys):
    code, _ = run("lu", "--name", "D_q", "--q", "0", "--n", "2")
    assert code == 3
    assert "1-minor" in capsys.readouterr().err


def test_ore_residual():
    assert run("ore-residual", "--poly", "1", "--c", "1", "--n", "3") == (0, "0\n")
    assert run("ore-residual", "--poly", "0; 1 E^1 H^0", "--c", "0", "--n", "1") == (1, "2 E^2\n")
    assert run("ore-residual", "--poly", "0; 1 E^1 H^0", "--c", "2", "--n", "4") == (0, "0\n")
    # eq_n^n is trivial
    assert run("ore-residual", "--poly", "H; E H^2", "--c", "1/2", "--n", "3", "--k", "3") == (0, "0\n")
    assert run("ore-residual", "--poly", "H", "--c", "1", "--n", "2", "--k", "3")[0] == 2


def test_ore_residual_parse_error(capsys):
    code, _ = run("ore-residual", "--poly", "1; 2 X", "--c", "1", "--n", "1")
    assert code == 2
    assert "position 5" in capsys.readouterr().err


def test_verify_matrix(tmp_path):
    path = tmp_path / "report.json"
    code, text = run("verify", "--suite", "matrix", "--depth", "3", "--out", str(path))
    assert code == 0 and text == ""
    reports = json.loads(path.read_text())
    assert {r["status"] for r in reports} == {"pass"}
    assert all("elapsed_ms" in r for r in reports)


def test_verify_is_deterministic_without_timing():
    a = run("verify", "--suite", "jacobi", "--depth", "4", "--no-timing")
    b = run("verify", "--suite", "jacobi", "--depth", "4", "--no-timing")
    assert a == b and a[0] == 0
    statuses = {r["status"] for r in json.loads(a[1])}
    assert statuses == {"pass", "skipped-degenerate"}


def test_verify_ore_small():
    code, text = run("verify", "--suite", "ore", "--depth", "2", "--c", "0,1/2", "--no-timing")
    assert code == 0
    reports = json.loads(text)
    assert {r["parameters"].get("c") for r in reports} >= {"0", "1/2"}


def test_depth_from_environment(monkeypatch):
    monkeypatch.setenv("ORELIM_DEPTH", "2")
    code, text = run("verify", "--suite", "matrix", "--no-timing")
    assert code == 0
    assert max(r["parameters"]["n"] for r in json.loads(text)) == 2
    monkeypatch.setenv("ORELIM_DEPTH", "zero")
    assert run("verify", "--suite", "matrix")[0] == 2


def test_verify_reports_failure(monkeypatch):
    from orelim.infmat import checks
    from orelim.infmat.checks import Mismatch

    def broken(n):
        raise Mismatch("deliberate", 1, 1, "1", "0")
    monkeypatch.setitem(checks.CHECKS, "pascal_inverse", broken)
    code, text = run("verify", "--suite", "matrix", "--depth", "1", "--no-timing")
    assert code == 1
    failed = [r for r in json.loads(text) if r["status"] == "fail"]
    assert failed[0]["witness"] == {"i": 1, "j": 1, "expected": "1", "actual": "0"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orelim", "catalog", "--name", "P", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entries"] == [["1", "0"], ["1", "1"]]
