import io
import json
import subprocess
import sys

import pytest

from skeintorus.cli import EXIT_DOMAIN, EXIT_OK, EXIT_PARSE, main, parse_point
from skeintorus.laurent import root_of_unity


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["mul", "T(1,0)", "T(0,1)"], "(t^-1)*T(1,-1) + (t)*T(1,1)"),
        (["mul", "--kind", "nc", "e(1,0)", "e(0,1)"], "(t)*e(1,1)"),
        (["embed", "T(1,2)"], "e(-1,-2) + e(1,2)"),
        (["unembed", "e(1,2)+e(-1,-2)"], "T(1,2)"),
        (["pi", "T(1,1)"], "(-t^-3)*a(1)"),
        (["act", "T(1,0)", "A(2)"], "(-2)*a(1) + a(3)"),
        (["intersect", "T(2,0)", "T(0,3)"], "6"),
        (["eval", "P(2;1,0)"], "(2) + T(2,0)"),
        (["lens", "--matrix", "0,1,1,0", "reduce", "a(2)"], "(t^4 + 2 + t^-4)*(1 (x) a^0)"),
        (["jw-expand", "2", "1", "0"], "1 + T(2,0)"),
        (["--eval-at-t", "-1", "eval", "t*T(1,0)"], "(-1+0i)*T(1,0)"),
    ],
)
def test_commands(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == EXIT_OK
    assert out == expected


def test_json_output(capsys):
    code, out, _ = run(["--format", "json", "pi", "T(0,1)"], capsys)
    assert code == EXIT_OK
    assert json.loads(out) == [[0, [[-2, "-1"], [2, "-1"]]]]


def test_json_input(capsys):
    code, out, _ = run(["eval", '[{"p": -1, "q": 0, "coeff": [[1, "2"]]}]'], capsys)
    assert (code, out) == (EXIT_OK, "(2t)*T(1,0)")


def test_stdin(capsys, monkeypatch):
    code, out, _ = run(["eval", "-"], capsys, stdin="T(0,1)*T(0,1)\n", monkeypatch=monkeypatch)
    assert (code, out) == (EXIT_OK, "(2) + T(0,2)")


def test_jw_eval_at(capsys):
    code, out, _ = run(["jw-expand", "2", "1", "0", "--eval-at", "4"], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "# trace (-1)^n [n+1] = 1+0i"


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "T(1,0"],
        ["eval", "T(1,0) + e(0,1)"],
        ["eval", "[{bad json"],
        ["eval", "--kind", "solid", "a(1)*a(1)"],
        ["lens", "--matrix", "1,2,3", "reduce", "a(1)"],
    ],
)
def test_parse_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == EXIT_PARSE
    assert "column" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["unembed", "e(1,0)"],
        ["eval", "P(2;2,2)"],
        ["lens", "--matrix", "3,1,2,1", "reduce", "a(1)"],
        ["jw-expand", "3", "1", "0", "--eval-at", "4"],
        ["jw-expand", "2", "2", "0"],
    ],
)
def test_domain_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == EXIT_DOMAIN
    assert err.startswith("error:")


def test_parse_point():
    assert parse_point("root:4") == root_of_unity(4)
    assert parse_point("exp(i*pi/(2*4))") == root_of_unity(4)
    assert parse_point("0.5+2i") == complex(0.5, 2)


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "skeintorus.cli", "mul", "T(1,1)", "T(1,-1)"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(t^2)*T(0,2) + (t^-2)*T(2,0)"
