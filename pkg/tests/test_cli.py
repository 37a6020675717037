import json
import subprocess
import sys

import pytest

from ajcable.cli import main
from ajcable.jones import jones_fig8
from ajcable.laurent import poly_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jones(capsys):
    assert run(capsys, "jones", "--n", "1") == (0, "1\n", "")
    code, out, _ = run(capsys, "jones", "--n", "2", "--format", "json")
    assert code == 0 and poly_from_json(json.loads(out)) == jones_fig8(2)
    assert run(capsys, "jones", "--n", "1", "--cable", "9")[:2] == (0, "1\n")
    assert run(capsys, "jones", "--n", "2", "--cable", "4")[0] == 2
    assert run(capsys, "jones")[0] == 2


def test_check_aj(capsys, tmp_path):
    out = tmp_path / "aj9.json"
    code, stdout, _ = run(capsys, "check-aj", "--r", "9", "--n-check", "12", "--out", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["proportional"] is True and rep["annihilation_checked"] == list(range(1, 13))
    assert "proportional=true" in stdout
    assert run(capsys, "check-aj", "--r", "8")[0] == 2


def test_check_aj_negative_r(capsys):
    code, out, _ = run(capsys, "check-aj", "--r", "-11", "--n-check", "10")
    assert code == 0 and json.loads(out)["proportional"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--which", "factorization"],
        ["verify", "--which", "cable-step", "--r", "9", "--n-max", "10"],
        ["verify", "--which", "degrees", "--r-list", "9,-9,11", "--n-max", "8"],
        ["verify", "--which", "cm"],
        ["verify", "--which", "symmetry"],
        ["verify", "--which", "breadth"],
    ],
)
def test_verify_suites(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--which", "degrees", "--r-list", "7", "--n-max", "3")
    assert code == 1 and json.loads(out)["cable_mismatches"] == [[7, 2]]


def test_guess(capsys):
    code, out, _ = run(capsys, "guess", "--seq", "cable:9", "--ldeg", "3", "--window", "-8:8", "--n", "1:40")
    assert code == 0 and out.splitlines()[-1] == "none"
    assert "L-degree <= 3" in out
    code, out, _ = run(capsys, "guess", "--seq", "demo-exp", "--ldeg", "1", "--window", "0:1", "--n", "1:10")
    assert code == 0 and out.splitlines()[-1] == "[(-t^2)*M] + [(1)]*L"
    code, out, _ = run(capsys, "guess", "--seq", "const", "--ldeg", "1", "--window", "0:0", "--n", "1:6")
    assert out.splitlines()[-1] == "[(-1)] + [(1)]*L"
    assert run(capsys, "guess", "--seq", "nope", "--ldeg", "1", "--window", "0:0", "--n", "1:6")[0] == 2
    assert run(capsys, "guess", "--seq", "const", "--ldeg", "1", "--window", "0-0", "--n", "1:6")[0] == 2


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "mm", "--z", "0.5", "--n", "10,20,40")
    rows = [line.split(",") for line in out.splitlines()[1:]]
    errs = [float(r[3]) for r in rows]
    assert code == 0 and errs == sorted(errs, reverse=True) and len(set(errs)) == 3
    assert run(capsys, "probe", "breadth", "--seq", "odd-fig8", "--n", "1:10")[:2] == (0, "32,24,0\n")
    assert run(capsys, "probe", "mm", "--z", "1")[0] == 2
    assert run(capsys, "probe", "mm", "--z", "0.5+0.5i", "--n", "10,20")[0] == 0


def test_seed_demo(capsys):
    code, out, _ = run(capsys, "--seed-demo")
    assert code == 0 and "demo-exp: t^2, t^6" in out


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--which", "degrees", "--r-list", "9,-9", "--n-max", "6", "--out", str(a)]) == 0
    assert main(["--threads", "3", "verify", "--which", "degrees", "--r-list", "9,-9", "--n-max", "6", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ajcable", "jones", "--n", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
