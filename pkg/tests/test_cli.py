import json
import subprocess
import sys

import pytest

from sixvertex import routes
from sixvertex.cli import EXIT_FAIL, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE, main
from sixvertex.errors import CancellationFailure
from sixvertex.checks import CheckResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def lines(out):
    return out.strip().splitlines()


def test_series_Q_at_one(capsys):
    code, out, _ = run(capsys, "series", "--what", "Q", "--gamma", "1", "--order", "3")
    assert code == EXIT_OK
    assert lines(out) == ["1: 4", "2: 35", "3: 402"]


def test_series_G(capsys):
    code, out, _ = run(capsys, "series", "--what", "G", "--order", "3")
    assert code == EXIT_OK and lines(out) == ["1: 1", "2: 5", "3: 33"]


def test_series_symbolic(capsys):
    code, out, _ = run(capsys, "series", "--what", "Q", "--gamma", "symbolic", "--order", "2")
    assert code == EXIT_OK
    assert lines(out) == ["1: 2*g + 2", "2: 9*g^2 + 16*g + 10"]


def test_series_R_and_q(capsys):
    _, out, _ = run(capsys, "series", "--what", "R", "--gamma", "0", "--order", "4")
    assert lines(out) == ["1: 1", "2: -2", "3: -4", "4: -20"]
    _, out, _ = run(capsys, "series", "--what", "q", "--gamma", "1", "--order", "2")
    assert lines(out) == ["1: 1", "2: 12"]


def test_series_rational_gamma(capsys):
    code, out, _ = run(capsys, "series", "--what", "Q", "--gamma", "1/2", "--order", "1")
    assert code == EXIT_OK and lines(out) == ["1: 3"]


def test_series_json(capsys):
    code, out, _ = run(capsys, "--no-timing", "series", "--what", "Q", "--gamma", "0", "--order", "2",
                       "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["schema"] == 1 and report["command"] == "series" and report["elapsed_ms"] == 0
    (res,) = report["results"]
    assert res["data"] == {"1": "2", "2": "10"}
    assert res["anchor"] == "thm1+pcd+pcd-closed+theta+wh"


@pytest.mark.parametrize("argv", [
    ["series", "--what", "G", "--gamma", "1", "--order", "3"],
    ["series", "--what", "Q", "--gamma", "2", "--route", "thm2", "--order", "3"],
    ["series", "--what", "Q", "--order", "3"],
    ["series", "--what", "Q", "--gamma", "1", "--order", "0"],
    ["series", "--what", "Q", "--gamma", "x/y", "--order", "3"],
    ["series", "--what", "Z"],
    ["oracle", "--edges", "6"],
    ["oracle", "--edges", "0"],
    ["oracle", "--vertices", "2", "--mode", "labelled"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_order_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SIXVERTEX_ORDER", "2")
    _, out, _ = run(capsys, "series", "--what", "Q", "--gamma", "1")
    assert lines(out) == ["1: 4", "2: 35"]
    monkeypatch.setenv("SIXVERTEX_ORDER", "many")
    code, _, _ = run(capsys, "series", "--what", "Q", "--gamma", "1")
    assert code == EXIT_USAGE


def test_route_disagreement_exit_code(capsys, monkeypatch):
    real = routes.compute

    def skewed(what, gamma, N, route):
        s = real(what, gamma, N, route)
        return s + s if route == "wh" else s

    monkeypatch.setattr(routes, "compute", skewed)
    code, _, err = run(capsys, "series", "--what", "Q", "--gamma", "1", "--order", "3")
    assert code == EXIT_INCONSISTENT and "disagree" in err


def test_internal_error_exit_code(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise CancellationFailure("numerator does not start at t^3")

    monkeypatch.setattr(routes, "q_big_of_t", broken)
    code, _, err = run(capsys, "series", "--what", "q", "--gamma", "1", "--order", "3")
    assert code == EXIT_INCONSISTENT and "inconsistency" in err


def test_verify_classical(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--order", "30")
    assert code == EXIT_OK
    assert lines(out)[-1] == "34/34 passed"


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "--no-timing", "verify", "--suite", "oracle", "--order", "3", "--format", "json")
    assert code == EXIT_OK
    report = json.loads(out)
    details = {r["name"]: r["data"]["detail"] for r in report["results"]}
    assert details["oracle: quartic Eulerian orientations"] == \
        "2*g + 2; 9*g^2 + 16*g + 10; 54*g^3 + 132*g^2 + 150*g + 66"
    assert all(r["status"] == "pass" and r["anchor"] for r in report["results"])


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--order", "0")
    assert code == EXIT_OK and lines(out) == ["0/0 passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from sixvertex import verify

    def failing(suite, N):
        return [CheckResult("broken", "a = b", "fail", N, 4, "")]

    monkeypatch.setattr(verify, "run", failing)
    code, out, _ = run(capsys, "verify", "--suite", "theta", "--order", "5")
    assert code == EXIT_FAIL
    assert "first failure at order 4" in out


def test_oracle_examples(capsys):
    code, out, _ = run(capsys, "oracle", "--edges", "1", "--mode", "partial")
    assert code == EXIT_OK and "count: 2*g + 2" in lines(out)
    code, out, _ = run(capsys, "oracle", "--vertices", "2", "--mode", "eo")
    assert code == EXIT_OK and "count: 9*g^2 + 16*g + 10" in lines(out)
    code, out, _ = run(capsys, "oracle", "--edges", "2", "--mode", "bijections")
    assert code == EXIT_OK and "fibre_sizes: [2]" in lines(out)
    code, out, _ = run(capsys, "oracle", "--edges", "3", "--mode", "labelled")
    assert code == EXIT_OK and "dual_images: 33" in lines(out)


def test_oracle_dump(capsys):
    code, out, _ = run(capsys, "oracle", "--edges", "1", "--dump")
    assert code == EXIT_OK
    assert len(lines(out)) == 2 + 2


def test_reports_are_byte_identical():
    argv = [sys.executable, "-m", "sixvertex", "series", "--what", "Q", "--gamma", "symbolic", "--order", "4",
            "--format", "json", "--no-timing"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["elapsed_ms"] == 0


def test_timing_environment_switch(capsys, monkeypatch):
    monkeypatch.setenv("SIXVERTEX_NO_TIMING", "1")
    _, out, _ = run(capsys, "oracle", "--edges", "1", "--format", "json")
    assert json.loads(out)["elapsed_ms"] == 0
