import json
import subprocess
import sys

import pytest

from arspace.cli import main, parse_lambda_key, run_command
from arspace.derived import parse_dobject, triangle
from arspace.geometry import LambdaKey, Sign, metric_d
from arspace.homalg import ar_sequence
from arspace.quiver import ext

from conftest import I, Q


@pytest.fixture
def q1_file(tmp_path):
    p = tmp_path / "q1.json"
    p.write_text(json.dumps({"points": ["0"], "first_index_parity": "even"}))
    return str(p)


def test_hom(q1_file):
    assert run_command(["hom", q1_file, "[0,1]", "[0,2]"]) == (0, "1\n[0,1]\n")
    assert run_command(["--quiver", q1_file, "hom", "[0,2]", "[0,1]"]) == (0, "0\n")


def test_arseq(q1_file):
    assert run_command(["arseq", q1_file, "{0.5}"]) == (0, "none (simple)\n")
    assert run_command(["arseq", q1_file, "[0,1]"]) == (0, "none (projective)\n")
    status, out = run_command(["arseq", q1_file, "[0.5,2)"])
    lines = out.splitlines()
    assert status == 0 and lines[0] == "type (1)"
    assert lines[1:] == [str(t) for t in ar_sequence(Q([0]), I("[0.5,2)")).terms]


def test_metric_matches_library(q1_file):
    q = Q([0])
    for a, b in [("[0.5,2)", "(0.5,2]"), ("[0.5,2)", "(0.5,2)"), ("[0,1]", "[5,6)")]:
        assert run_command(["metric", q1_file, a, b]) == (0, "%s\n" % metric_d(q, I(a), I(b)))
    assert run_command(["metric", q1_file, "[0.5,2)", "(0.5,2]"])[1] == "(0, 2)\n"


def test_ext_and_triangle(q1_file):
    status, out = run_command(["ext", q1_file, "[0,1]", "[0.5,2]"])
    assert out == "1\n[0,2] + [0.5,1]\nComplete{[0,1], [0,2], [0.5,1], [0.5,2]}\n"
    status, out = run_command(["triangle", q1_file, "[0,2]@0", "[0,1]@1"])
    assert out == "%s\n" % triangle(Q([0]), parse_dobject("[0,2]@0"), parse_dobject("[0,1]@1"))


def test_gamma_and_validate(q1_file):
    assert run_command(["--quiver", q1_file, "gamma", "(-1,1)", "[0,1]@1"]) == (
        0,
        "(-1,1)@0 (1.570796, 0.000000) position 1\n[0,1]@1 (3.926991, -0.785398) position 4\n",
    )
    assert run_command(["validate", q1_file])[0] == 0


def test_plot_writes_svg(q1_file, tmp_path):
    out = tmp_path / "out.svg"
    args = ["plot", q1_file, "--mark", "(-1,1)", "--lambda", "0-", "--region", "[0,1]",
            "--rect", "[0,1],[0.5,2]", "-o", str(out)]
    assert run_command(args)[0] == 0
    first = out.read_text()
    run_command(args)
    assert out.read_text() == first and first.startswith("<svg")


def test_domain_errors_exit_one(q1_file, capsys):
    assert main(["hom", q1_file, "[0,1", "[0,2]"]) == 1
    assert "IntervalSyntaxError" in capsys.readouterr().err
    assert main(["gamma", q1_file, "[-inf,0]"]) == 1
    assert "ClosedInfinity" in capsys.readouterr().err


def test_bad_quiver_is_domain_error(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"points": ["1", "0"]}')
    assert main(["validate", str(p)]) == 1
    assert "UnsortedPoints" in capsys.readouterr().err


def test_usage_errors_exit_two(q1_file, tmp_path):
    assert run_command(["frobnicate"])[0] == 2
    assert run_command(["hom", q1_file, "[0,1]"])[0] == 2
    assert run_command(["hom", str(tmp_path / "missing.json"), "[0,1]", "[0,2]"])[0] == 2
    assert run_command(["hom", "[0,1]", "[0,2]"])[0] == 2
    assert run_command(["verify", "--trials", "x"])[0] == 2


def test_verify_small(capsys):
    assert main(["verify", "--trials", "40", "--seed", "3", "--max-ss", "6"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "OK"


def test_lambda_key_syntax():
    assert parse_lambda_key("0-") == LambdaKey(ext(0), Sign.MINUS)
    assert parse_lambda_key("lambda[1/2+]") == LambdaKey(ext("1/2"), Sign.PLUS)
    assert parse_lambda_key("-inf") == LambdaKey(ext("-inf"))
    assert parse_lambda_key("-2") == LambdaKey(ext(-2))


def test_console_entry_point(q1_file):
    r = subprocess.run([sys.executable, "-m", "arspace", "hom", q1_file, "[0,1]", "[0,2]"],
                       capture_output=True, text=True)
    assert (r.returncode, r.stdout) == (0, "1\n[0,1]\n")
