import io
import json
import shutil
import subprocess

import pytest
from hypothesis import given
from strategies import et_elements, y_elements

from yhe.cli import main
from yhe.parsing import format_element, parse_et, parse_y
from yhe.scalars import Scalar
from yhe.yokonuma.algebra import y_ei, y_g, y_one


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_mul_quadratic():
    code, out = run("mul", "--alg", "y", "-r", "2", "-n", "2", "g1", "g1")
    assert code == 0
    g = y_g(1, 2, 2)
    expected = y_one(2, 2) + (y_ei(1, 2, 2) * g).scale(Scalar.q(2) - Scalar.q(2, -1))
    assert parse_y(out.strip(), 2, 2) == expected


def test_mul_et():
    assert run("mul", "--alg", "et", "-n", "2", "e1", "e1") == (0, "E{1,2}\n")


def test_mul_json_round_trip():
    code, out = run("mul", "-r", "2", "-n", "2", "--format", "json", "t1", "g1")
    assert code == 0
    doc = json.loads(out)
    from yhe.parsing import element_from_json

    assert element_from_json(doc) == parse_y("t1*g1", 2, 2)


def test_verify_relations():
    code, out = run("verify", "relations-y", "-r", "2", "-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "suite=relations-y r=2 n=3 seed=0"
    assert lines[-1].endswith("checks passed")
    assert all(line.startswith("PASS") for line in lines[1:-1])


def test_verify_counting_reports_360():
    code, out = run("verify", "counting", "-n", "4")
    assert code == 0
    assert "360" in out


def test_verify_json():
    code, out = run("verify", "counting", "-n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["checks"]


def test_usage_errors():
    assert run("verify", "no-such-suite")[0] == 2
    assert run("mul", "-n", "2", "g5")[0] == 2
    assert run("mul", "-n", "2", "g1 +")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("dim", "--alg", "et", "-n", "3", "--alpha", "2,2")[0] == 2


def test_budget_exit(monkeypatch):
    monkeypatch.setenv("YHE_BUDGET", "10")
    assert run("basis", "-r", "2", "-n", "3")[0] == 3
    monkeypatch.delenv("YHE_BUDGET")
    assert run("basis", "-r", "2", "-n", "3", "--budget", "5")[0] == 3


def test_dim():
    assert run("dim", "--alg", "et", "-n", "3", "--alpha", "2,1") == (0, "18\n")
    assert run("dim", "-r", "2", "-n", "3") == (0, "48\n")
    code, out = run("dim", "--alg", "et", "-n", "3", "--shapes")
    assert code == 0 and out.splitlines()[-1] == "total 30 = 30"


def test_basis_listing():
    code, out = run("basis", "-r", "1", "-n", "1")
    assert code == 0 and out.count("\n") == 1 and out.strip().endswith(": 1")
    code, out = run("basis", "--alg", "et", "-n", "2", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5


def test_rep():
    code, out = run("rep", "-r", "2", "-n", "2", "--elem", "g1", "--format", "json")
    assert code == 0 and json.loads(out)["dim"] == 16


def test_determinism():
    a = run("verify", "cellular-et", "-n", "3", "--seed", "7")
    b = run("verify", "cellular-et", "-n", "3", "--seed", "7")
    assert a == b and a[0] == 0


@given(y_elements(3, 3))
def test_y_print_parse_round_trip(x):
    assert parse_y(format_element(x), 3, 3) == x


@given(et_elements(3))
def test_et_print_parse_round_trip(x):
    assert parse_et(format_element(x), 3) == x


@pytest.mark.skipif(shutil.which("yhe") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["yhe", "verify", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run(["yhe", "mul", "--alg", "et", "-n", "2", "e1", "e1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "E{1,2}\n"
