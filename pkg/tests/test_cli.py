"""End-to-end checks of the command-line front end."""

import json
import subprocess
import sys
from io import StringIO

import pytest

from bookhopf import cli


def run_cli(argv):
    out = StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run_cli(argv + ["--format", "json"])
    return code, json.loads(text)


def strip_elapsed(obj):
    if isinstance(obj, dict):
        return {k: strip_elapsed(v) for k, v in obj.items() if k != "elapsed_ms"}
    if isinstance(obj, list):
        return [strip_elapsed(v) for v in obj]
    return obj


# -- verify ---------------------------------------------------------------------


def test_verify_passes_on_healthy_algebra():
    code, text = run_cli(["verify", "--p", "3", "--s", "1"])
    assert code == 0
    assert "overall: pass" in text
    assert "counit" in text and "exhaustive" in text


def test_verify_all_s():
    code, payload = run_json(["verify", "--p", "3", "--all-s"])
    assert code == 0
    assert [run["s"] for run in payload["runs"]] == [1, 2]
    assert payload["passed"] is True


def test_verify_json_shape():
    code, payload = run_json(["verify", "--p", "3", "--s", "2"])
    assert code == 0
    assert payload["command"] == "verify" and payload["p"] == 3
    (run,) = payload["runs"]
    assert run["s"] == 2 and run["passed"] is True
    for record in run["axioms"]:
        assert set(record) >= {"axiom", "status", "checked", "mode", "violations"}
        assert record["status"] == "pass" and record["violations"] == []


def test_verify_rejects_composite_p(capsys):
    code, text = run_cli(["verify", "--p", "4", "--s", "1"])
    assert code == 2
    assert text == ""
    assert "p must be prime" in capsys.readouterr().err


def test_verify_s_zero_needs_permissive(capsys):
    code, _ = run_cli(["verify", "--p", "3", "--s", "0"])
    assert code == 2
    assert "permissive" in capsys.readouterr().err


def test_verify_s_zero_negative_control():
    code, text = run_cli(["verify", "--p", "3", "--s", "0", "--permissive"])
    assert code == 0  # failing exactly as predicted counts as success
    assert "negative control matches the predicted failure: yes" in text
    assert "overall: pass" in text
    assert "Delta: y^3 = 0" in text


def test_verify_sampling_flags_accepted():
    code, payload = run_json(
        ["verify", "--p", "3", "--s", "1", "--seed", "7", "--sample-size", "50"]
    )
    assert code == 0
    modes = {r["mode"] for run in payload["runs"] for r in run["axioms"]}
    assert modes == {"exhaustive"}  # every H(3, s) domain is tiny


def test_verify_is_deterministic():
    argv = ["verify", "--p", "3", "--s", "2"]
    assert strip_elapsed(run_json(argv)[1]) == strip_elapsed(run_json(argv)[1])


# -- classify ---------------------------------------------------------------------


def test_classify_text_h51():
    code, text = run_cli(["classify", "--p", "5", "--s", "1"])
    assert code == 0
    assert "classify H(5, 1)" in text
    assert "MPI: (i=1, j=0)" in text
    assert "implements S^2: (i=1, j=0)" in text
    assert "(i=1, j=0) beta(l)=1 implements S^2, stable" in text


def test_classify_json_h52():
    code, payload = run_json(["classify", "--p", "5", "--s", "2"])
    assert code == 0
    (run,) = payload["runs"]
    assert run["mpi"] == []
    assert run["implements"] == [{"i": 4, "j": 3}]
    assert len(run["pairs"]) == 25
    winner = next(r for r in run["pairs"] if r["implements_s2"])
    assert winner == {
        "i": 4,
        "j": 3,
        "implements_s2": True,
        "stable": False,
        "beta_l": "q^2",
    }


def test_classify_text_and_json_carry_same_data():
    _, text = run_cli(["classify", "--p", "3", "--all-s"])
    _, payload = run_json(["classify", "--p", "3", "--all-s"])
    for run in payload["runs"]:
        assert f"classify H(3, {run['s']})" in text
        for row in run["pairs"]:
            assert f"(i={row['i']}, j={row['j']}) beta(l)={row['beta_l']}" in text


def test_classify_permissive_zero():
    code, payload = run_json(["classify", "--p", "3", "--s", "0", "--permissive"])
    assert code == 0
    (run,) = payload["runs"]
    assert run["mpi"] == [{"i": 0, "j": 2}, {"i": 1, "j": 0}]
    assert len(run["implements"]) == 3  # every j = i - 1 pair implements when s = 0


# -- table ---------------------------------------------------------------------


def test_table_p3():
    code, payload = run_json(["table", "--p", "3"])
    assert code == 0
    assert [row["s"] for row in payload["rows"]] == [1, 2]
    assert all(row["has_mpi"] for row in payload["rows"])
    assert payload["rows"][0]["mpi"] == [{"i": 1, "j": 0}]
    assert payload["rows"][1]["mpi"] == [{"i": 0, "j": 2}]


def test_table_p5_text():
    code, text = run_cli(["table", "--p", "5"])
    assert code == 0
    lines = {line.strip().split(":")[0]: line for line in text.splitlines() if "s=" in line}
    assert "MPI yes" in lines["s=1"] and "MPI yes" in lines["s=4"]
    assert "MPI no" in lines["s=2"] and "MPI no" in lines["s=3"]
    assert "beta(l)=q^2" in lines["s=2"]


def test_table_marks_mpi_exactly_when_stable():
    _, payload = run_json(["table", "--p", "5"])
    for row in payload["rows"]:
        assert row["has_mpi"] == (row["s"] in (1, 4))
        assert len(row["implements"]) == 1


# -- argument handling ----------------------------------------------------------


def test_s_and_all_s_are_mutually_exclusive():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--p", "3", "--s", "1", "--all-s"], out=StringIO())
    assert exc.value.code == 2


def test_s_choice_is_required():
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify", "--p", "3"], out=StringIO())
    assert exc.value.code == 2


def test_out_of_range_s_rejected(capsys):
    code, _ = run_cli(["verify", "--p", "3", "--s", "5"])
    assert code == 2
    assert "s" in capsys.readouterr().err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bookhopf.cli", "table", "--p", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "modular pairs in involution for H(3, s)" in proc.stdout
