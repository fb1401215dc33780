import json
import subprocess
import sys

import pytest

from bisectarea.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out), out


def test_solve_isosceles(capsys):
    doc, _ = run_json(capsys, "solve", "1", "1/3", "1/3")
    assert doc["command"] == "solve"
    assert doc["outputs"]["area"] == pytest.approx(0.14126357678041507, abs=1e-10)
    b, c = doc["outputs"]["sides"][1:]
    assert b == pytest.approx(c, rel=1e-12)
    assert doc["evidence"]["residual"] <= 1e-12


def test_wolff_1_2_3(capsys):
    doc, _ = run_json(capsys, "wolff", "1", "2", "3")
    out = doc["outputs"]
    assert (out["a2"], out["a3"], out["a4"]) == ("49/36", "1/6", "7/18")
    assert len(out["W"]) == 11
    assert out["W"][-1] == "1" and out["W"][9] == "0"
    assert out["recovered_bisectors"] == ["1", "2", "3"]
    code, text, _ = run(capsys, "wolff", "1", "2", "3")
    assert code == 0 and "a2=49/36 a3=1/6 a4=7/18" in text


def test_constructible_cubic(capsys):
    doc, _ = run_json(capsys, "constructible", "6,-3,-12,4")
    assert doc["outputs"]["verdict"] == "NotConstructible"
    assert doc["outputs"]["degree"] == 3
    assert doc["outputs"]["irreducibility"]["method"] == "eisenstein"
    assert "p = 3" in doc["outputs"]["irreducibility"]["witness"]


def test_galois_and_invariants(capsys):
    # "--" lets a negative constant term through argparse.
    code, out, _ = run(capsys, "galois", "--json", "--", "-1,-3,0,1")
    assert code == 0
    assert json.loads(out)["outputs"]["verdict"] == "ContainsAlternating"
    doc, _ = run_json(capsys, "invariants", "1", "1/3", "1/3")
    assert doc["outputs"] == {"a2": "19", "a3": "9", "a4": "99"}


def test_forward_with_precision(capsys):
    doc, _ = run_json(capsys, "forward", "3", "4", "5", "--precision", "30")
    assert doc["outputs"]["S"] == 6
    assert doc["outputs"]["S_high_precision"].startswith("6.0")


def test_radical(capsys):
    doc, _ = run_json(capsys, "radical", "1", "2", "3")
    assert doc["outputs"]["verdict"] == "NotRadical"
    assert doc["evidence"]["certificate"]["verdict"] == "SymmetricGroup"


@pytest.mark.parametrize(
    "argv, name",
    [
        (["forward", "1", "1", "2"], "InvalidTriangle"),
        (["solve", "1", "0", "1"], "NonPositiveInput"),
        (["invariants", "1", "-1", "1"], "NonPositiveInput"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, name):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith(name + ":")
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["solve", "1", "2"],
        ["solve", "1", "x", "2"],
        ["wolff", "1", "2", "1/0"],
        ["galois", "1,,2"],
        ["galois", "5"],
        ["nonsense"],
        ["reproduce-paper", "--corpus", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["forward", "4", "5", "6"],
        ["solve", "1", "2", "2.5"],
        ["wolff", "1", "2", "3"],
        ["galois", "6,-3,-12,4"],
        ["radical", "1", "1", "1"],
    ],
)
def test_json_round_trip_byte_identical(capsys, argv):
    doc, raw = run_json(capsys, *argv)
    assert dump_json(doc) + "\n" == raw
    assert set(doc) == {"schema", "command", "inputs", "outputs", "evidence"}
    assert doc["schema"] == 1


def test_reproduce_default_passes(capsys):
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0
    assert out.strip().endswith("overall: PASS")


def test_reproduce_starved_prime_bound(capsys):
    code, out, err = run(capsys, "reproduce-paper", "--prime-bound", "2", "--corpus", "20", "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["outputs"]["summary"]["s10_certificate"] == "inconclusive"
    assert not doc["outputs"]["ok"]
    assert "overall: FAIL" in err


def test_reproduce_deterministic(capsys):
    def verdicts():
        code, out, _ = run(capsys, "reproduce-paper", "--seed", "7", "--corpus", "50", "--json")
        doc = json.loads(out)
        ev = [{k: v for k, v in c["evidence"].items() if k != "seconds"} for c in doc["evidence"]]
        return code, doc["outputs"], ev

    assert verdicts() == verdicts()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bisectarea", "constructible", "6,-3,-12,4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "NotConstructible" in proc.stdout
