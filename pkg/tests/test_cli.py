import json
import subprocess
import sys

import pytest

from coisotropic.cli import main
from coisotropic.report import Check, VerificationReport
from coisotropic.sympair import catalog, pair_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "coisotropic.cli", *argv], capture_output=True, text=True)


def test_verify_sl2_example(capsys):
    code, out, _ = run(capsys, "verify", "sl2", "--max-lambda", "8", "--trials", "100", "--seed", "7")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["seed"] == 7 and rep["suite"] == "sl2"
    assert set(rep) >= {"suite", "seed", "checks", "runtime_ms"}
    assert all(set(c) == {"name", "status", "witness"} for c in rep["checks"])


def test_verify_keylemma_example(capsys):
    code, out, _ = run(capsys, "verify", "keylemma", "--n", "2", "--prime", "3", "--prime", "5", "--prime", "7")
    rep = json.loads(out)
    assert code == 0
    est = [c for c in rep["checks"] if "dim R_A cap L_ii < 2n" in c["name"]]
    assert est and all(c["status"] == "pass" and "estimate 3" in c["witness"] for c in est)


def test_verify_symplectic(capsys):
    code, out, _ = run(capsys, "verify", "symplectic", "--dim", "6", "--trials", "50", "--seed", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"


@pytest.mark.parametrize("family, size", [("diag-sl", 2), ("sl-so", 3), ("sp-gl", 1)])
def test_verify_pair_family(capsys, family, size):
    code, out, _ = run(capsys, "verify", "pair", "--family", family, "--size", str(size))
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"


def test_verify_pair_input_file(tmp_path, capsys):
    data = pair_to_json(catalog("sl-so", 2))
    data["nilpotents"] = [[["0", "1"], ["0", "0"]]]
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "pair", "--input", str(path))
    rep = json.loads(out)
    assert code == 0
    assert any("distinguished, defect < 0" in c["name"] and c["status"] == "pass" for c in rep["checks"])


@pytest.mark.parametrize("payload, invariant", [
    ("{broken", "schema"),
    (json.dumps({"n": 2}), "schema"),
    (json.dumps({"n": 2, "g_basis": [["0", "1", "0", "0"], ["0", "0", "1", "0"]], "theta": [["1", "0"], ["0", "1"]]}),
     "bracket closure"),
    (json.dumps({"n": 2, "g_basis": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["1", "0", "0", "-1"]],
                 "theta": [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}), "theta involution"),
])
def test_malformed_pair_input(tmp_path, capsys, payload, invariant):
    path = tmp_path / "malformed.json"
    path.write_text(payload)
    code, out, err = run(capsys, "verify", "pair", "--input", str(path))
    assert code == 2 and out == ""
    assert f"'{invariant}'" in err


def test_missing_input_file(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "pair", "--input", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("argv", [
    ["verify", "sl2", "--bogus"],
    ["verify"],
    ["frobnicate"],
    ["verify", "keylemma", "--n", "2"],
    ["report", "--format", "pdf", "--out", "x"],
])
def test_bad_flags_exit_2_with_usage(argv):
    res = cli(*argv)
    assert res.returncode == 2 and "usage:" in res.stderr


@pytest.mark.parametrize("argv", [
    ["verify", "keylemma", "--n", "2", "--prime", "4", "--prime", "5", "--prime", "7"],
    ["verify", "keylemma", "--n", "9", "--prime", "3"],
    ["verify", "symplectic", "--dim", "5"],
    ["verify", "pair", "--family", "sl-so"],
    ["verify", "pair", "--family", "sl-so", "--size", "9"],
])
def test_invalid_values_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_determinism_and_timing(capsys):
    argv = ["verify", "sl2", "--max-lambda", "4", "--trials", "20", "--seed", "11"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and json.loads(a)["runtime_ms"] == 0
    _, c, _ = run(capsys, *argv, "--timing")
    assert json.loads(c)["runtime_ms"] >= 0
    _, d, _ = run(capsys, "verify", "sl2", "--max-lambda", "4", "--trials", "20", "--seed", "12")
    assert json.loads(d)["seed"] == 12


def test_report_json_and_markdown(tmp_path, capsys):
    out_json = tmp_path / "r.json"
    code, _, _ = run(capsys, "report", "--format", "json", "--out", str(out_json), "--suite", "sl2")
    assert code == 0
    rep = VerificationReport.from_json(out_json.read_text())
    assert rep.to_json() == out_json.read_text()
    out_md = tmp_path / "r.md"
    code, _, _ = run(capsys, "report", "--format", "md", "--out", str(out_md), "--from", str(out_json))
    text = out_md.read_text()
    assert code == 0 and "| check | status | witness |" in text
    assert text.count("\n| ") >= len(rep.checks)


def test_report_from_failing_source_exits_1(tmp_path, capsys):
    rep = VerificationReport("demo", 0)
    rep.add("identity", True, "1/2")
    rep.add("broken", False, "counterexample 3/4")
    src = tmp_path / "fail.json"
    src.write_text(rep.to_json())
    code, _, _ = run(capsys, "report", "--format", "md", "--out", str(tmp_path / "o.md"), "--from", str(src))
    assert code == 1


# -- report object --------------------------------------------------------------

def test_report_status_rules():
    rep = VerificationReport("x", 1)
    assert rep.status == "pass" and rep.exit_code == 0
    rep.add("skip me", None, "not applicable")
    assert rep.status == "pass"
    rep.add("bad", False, "-7/3")
    assert rep.status == "fail" and rep.exit_code == 1
    assert rep.totals == {"pass": 0, "fail": 1, "skip": 1}


def test_report_round_trip_preserves_exact_text():
    rep = VerificationReport("x", 5, [Check("a", "pass", "1/3"), Check("b", "skip", None)], 17)
    again = VerificationReport.from_json(rep.to_json())
    assert again == rep and again.to_json() == rep.to_json()
    assert again.checks[0].witness == "1/3"
