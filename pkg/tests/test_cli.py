import csv
import io
import subprocess
import sys

import pytest

from firstdigit import cli

import reference_tables as ref


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def parse(text):
    return list(csv.reader(io.StringIO(text)))


def column(rows, idx):
    return [float(r[idx]) for r in rows[1:10]]


def test_analytic_exponential():
    code, out, _ = run("analytic", "--family", "exponential")
    assert code == 0
    rows = parse(out)
    assert rows[0] == ["digit", "p_k"]
    assert column(rows, 1) == list(ref.BENFORD)
    assert rows[-1] == ["sum", "1.00000000"]


@pytest.mark.parametrize("argv, table", [
    (("--family", "log", "--base", "2", "--decade", "1"), ref.LOG_2_DECADE_1),
    (("--family", "power", "--exponent", "3"), ref.POWER_3),
    (("--family", "root", "--index", "2"), ref.ROOT_2),
    (("--family", "reciprocal", "--numerator", "50"), ref.RECIPROCAL),
])
def test_analytic_families(argv, table):
    code, out, _ = run("analytic", *argv)
    assert code == 0
    assert column(parse(out), 1) == list(table)


def test_analytic_bad_parameter():
    code, out, err = run("analytic", "--family", "power", "--exponent", "1")
    assert code == 2 and out == ""
    assert "exponent must exceed 1" in err and err.count("\n") == 1


@pytest.mark.parametrize("name", ["bacterial", "scuba", "pool", "freefall", "height", "population"])
def test_scenario_summary(name):
    code, out, _ = run("scenario", name, "--summary")
    assert code == 0
    rows = parse(out)
    assert [int(r[1]) for r in rows[1:10]] == list(ref.SCENARIO_COUNTS[name])
    assert rows[-1][:2] == ["sum", str(ref.SCENARIO_TOTALS[name])]


def test_scenario_bacterial_first_row():
    rows = parse(run("scenario", "bacterial")[1])
    assert rows[1] == ["1", "59", "0.29797980", "0.30103000"]


def test_scenario_rows():
    code, out, _ = run("scenario", "bacterial", "--rows")
    rows = parse(out)
    assert code == 0 and rows[0] == ["hours", "bacteria", "digit"]
    assert rows[1] == ["1", "447.5474093", "4"]
    assert rows[30][1].endswith("E+07") and len(rows) == 201
    assert rows[-1][2] == ""
    pool = parse(run("scenario", "pool", "--rows")[1])
    assert pool[1] == ["1", "5", ""]


def test_scenario_unknown():
    code, _, err = run("scenario", "nosuch")
    assert code == 2 and "invalid choice" in err


def test_sequence_primes():
    code, out, _ = run("sequence", "primes", "--limit", "1000000")
    rows = parse(out)
    assert code == 0
    assert rows[0] == ["digit", "[1,100)", "[1,10000)", "[1,1000000)"]
    for idx, limit in enumerate(sorted(ref.PRIME_FREQUENCIES), start=1):
        assert column(rows, idx) == list(ref.PRIME_FREQUENCIES[limit])


def test_sequence_fibonacci_and_factorial():
    rows = parse(run("sequence", "fibonacci", "--count", "500")[1])
    assert [int(r[1]) for r in rows[1:10]] == list(ref.FIBONACCI_500_COUNTS)
    rows = parse(run("sequence", "factorial", "--count", "2000", "--decimals", "5")[1])
    assert rows[1] == ["1", "591", "0.29550", "0.30103000"]
    logsum = run("sequence", "factorial", "--count", "2000", "--decimals", "5", "--method", "logsum")
    assert parse(logsum[1]) == rows


@pytest.mark.parametrize("argv", [("primes", "--limit", "200000000"),
                                  ("fibonacci", "--count", "10001"),
                                  ("factorial", "--count", "0"),
                                  ("primes", "--limit", "1")])
def test_sequence_caps(argv):
    assert run("sequence", *argv)[0] == 2


def test_empirical_matches_scenarios():
    code, out, _ = run("empirical", "--family", "exponential", "--base", "e", "--scale", "300",
                       "--rate", "0.4", "--start", "1", "--step", "1", "--count", "198")
    assert code == 0
    assert out == run("scenario", "bacterial", "--summary")[1]
    code, out, _ = run("empirical", "--family", "linear", "--slope", "5", "--start", "1",
                       "--step", "1", "--count", "200", "--lo", "10", "--hi", "1000")
    rows = parse(out)
    assert all(r[2] == r[3] == "0.11111111" for r in rows[1:10])


@pytest.mark.parametrize("extra", [("--step", "0"), ("--step", "1", "--lo", "0.5"),
                                   ("--step", "1", "--lo", "1e9")])
def test_empirical_bad_grid(extra):
    code, _, _ = run("empirical", "--family", "linear", "--start", "1", "--count", "10", *extra)
    assert code == 2


def test_limits():
    rows = parse(run("limits", "power-p1", "--a", "1000000")[1])
    assert rows[0] == ["probe", "argument", "value", "limit", "gap"]
    assert float(rows[1][4]) < 1e-5
    assert float(parse(run("limits", "fib-ratio", "--n", "500")[1])[1][4]) < 1e-10
    assert 1 < float(parse(run("limits", "stirling", "--x", "2000")[1])[1][2]) < 1.001
    assert run("limits", "nosuch")[0] == 2


def test_text_format():
    code, out, _ = run("analytic", "--family", "linear", "--format", "text")
    lines = out.splitlines()
    assert code == 0 and lines[0].split() == ["digit", "p_k"]
    assert len({len(line) for line in lines}) == 1


def test_deterministic_and_lf_only():
    first = run("scenario", "scuba", "--rows")[1]
    assert first == run("scenario", "scuba", "--rows")[1]
    assert "\r" not in first and first.endswith("\n")
    assert all(line.count(",") == 2 for line in first.splitlines())


def test_internal_failure_exit_code(monkeypatch):
    def boom(args, out):
        raise RuntimeError("broken")
    monkeypatch.setattr(cli, "cmd_analytic", boom)
    code, _, err = run("analytic", "--family", "linear")
    assert code == 1 and "internal failure" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "firstdigit", "analytic", "--family", "root"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "1,0.03030303"
