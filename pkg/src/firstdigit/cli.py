"""Command-line front end: prints digit-probability tables as CSV or text.

Exit codes: 0 success, 2 bad arguments or parameters, 1 internal failure.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import math
import sys

from . import analytic, report, scenarios, sequences
from .digitcore import DIGITS, DigitDistribution, counts_to_distribution, decade_of
from .empirical import RangeFilter, SampleSpec, sample_digit_counts

CAPS = {"primes": 10**8, "fibonacci": 10**4, "factorial": 10**4}

FAMILY_NAMES = ("exponential", "power", "linear", "root", "log", "logarithmic", "reciprocal")


class UsageError(Exception):
    pass


def _number(text: str) -> float:
    if text.lower() == "e":
        return math.e
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _count(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


# ----------------------------------------------------------------- output

def emit(header, rows, fmt: str, out) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    table = [tuple(header)] + [tuple(r) for r in rows]
    widths = [max(len(str(r[i])) for r in table) for i in range(len(header))]
    for r in table:
        out.write("  ".join(str(cell).rjust(w) for cell, w in zip(r, widths)).rstrip() + "\n")


def format_value(y: float) -> str:
    """``4.48E+02`` style at and above one million, plain decimal below."""
    if abs(y) >= 1e6:
        return f"{y:.2E}"
    return f"{y:.10g}"


# -------------------------------------------------------------- families

def add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--base", type=_number, help="exponential/log base (accepts 'e')")
    p.add_argument("--exponent", type=_number, help="power exponent")
    p.add_argument("--index", type=_number, help="root index")
    p.add_argument("--scale", type=_number, help="multiplier h of exponential/power/root")
    p.add_argument("--rate", type=_number, help="exponential rate m")
    p.add_argument("--slope", type=_number, help="linear slope m")
    p.add_argument("--stretch", type=_number, help="log divisor h")
    p.add_argument("--shift", type=_number, help="log inner divisor m")
    p.add_argument("--numerator", type=_number, help="reciprocal numerator a")
    p.add_argument("--hshift", type=_number, help="reciprocal horizontal shift")


def build_family(args) -> analytic.FunctionFamily:
    def given(**defaults):
        return {k: getattr(args, k) for k in defaults if getattr(args, k) is not None} | {
            k: v for k, v in defaults.items() if getattr(args, k) is None}

    name = args.family
    if name == "exponential":
        return analytic.Exponential(**given(base=math.e, scale=1.0, rate=1.0))
    if name == "power":
        return analytic.Power(**given(exponent=2.0, scale=1.0))
    if name == "linear":
        return analytic.Linear(**given(slope=1.0))
    if name == "root":
        return analytic.Root(**given(index=2.0, scale=1.0))
    if name in ("log", "logarithmic"):
        return analytic.Logarithmic(**given(base=2.0, stretch=1.0, shift=1.0))
    return analytic.Reciprocal(**given(numerator=1.0, hshift=0.0))


# -------------------------------------------------------------- commands

def cmd_analytic(args, out) -> None:
    family = build_family(args)
    dist = analytic.analytic_distribution(family, args.decade)
    header, rows = report.distribution_table({"p_k": dist}, args.decimals)
    emit(header, rows, args.format, out)


def cmd_scenario(args, out) -> None:
    result = scenarios.run_scenario(args.name)
    d = result.definition
    if args.rows:
        rows = [(f"{r.x:.10g}", format_value(r.y), "" if r.digit is None else str(r.digit))
                for r in result.rows]
        emit((d.x_label, d.y_label, "digit"), rows, args.format, out)
    else:
        rows = report.comparison_table(result.counts, result.reference, args.decimals)
        emit(report.COMPARISON_HEADER, rows, args.format, out)


def _check_cap(kind: str, size: int) -> None:
    if size > CAPS[kind]:
        raise UsageError(f"{kind} size {size} exceeds the cap of {CAPS[kind]}")


def cmd_sequence(args, out) -> None:
    benford = DigitDistribution(tuple(analytic.benford_pk(k) for k in DIGITS))
    if args.kind == "primes":
        limit = args.limit
        if limit < 2:
            raise UsageError("primes limit must be at least 2")
        _check_cap("primes", limit)
        edges = [10**e for e in range(2, 64, 2) if 10**e < limit] + [limit]
        columns = {}
        for edge in edges:
            counts = sequences.prime_digit_counts(edge)
            columns[f"[1,{edge})"] = counts_to_distribution(counts)
        header, rows = report.distribution_table(columns, args.decimals)
        emit(header, rows, args.format, out)
        return
    count = args.count
    if count < 1:
        raise UsageError(f"{args.kind} count must be at least 1")
    _check_cap(args.kind, count)
    if args.kind == "fibonacci":
        kind = sequences.Fibonacci(count)
    else:
        kind = sequences.Factorial(count, args.method)
    counts = sequences.sequence_digit_counts(kind)
    rows = report.comparison_table(counts, benford, args.decimals)
    emit(report.COMPARISON_HEADER, rows, args.format, out)


def cmd_empirical(args, out) -> None:
    family = build_family(args)
    spec = SampleSpec(args.start, args.step, args.count)
    filt = RangeFilter(args.lo, args.hi, include_hi=args.include_hi)
    counts = sample_digit_counts(lambda x: float(family.forward(x)), spec, filt)
    if counts.total == 0:
        raise UsageError("no sampled value falls inside the filter window")
    ref = analytic.analytic_distribution(family, decade_of(args.lo))
    rows = report.comparison_table(counts, ref, args.decimals)
    emit(report.COMPARISON_HEADER, rows, args.format, out)


def cmd_limits(args, out) -> None:
    if args.probe == "power-p1":
        arg, value, limit = args.a, analytic.power_p1(args.a), analytic.LOG10_2
    elif args.probe == "fib-ratio":
        if args.n > CAPS["fibonacci"]:
            raise UsageError(f"n exceeds the cap of {CAPS['fibonacci']}")
        arg, value, limit = args.n, sequences.fibonacci_ratio(args.n), sequences.GOLDEN_RATIO
    else:
        if args.x > 10**7:
            raise UsageError("x exceeds the cap of 10000000")
        arg, value, limit = args.x, sequences.stirling_ratio(args.x), 1.0
    row = (args.probe, f"{arg:.10g}", repr(value), repr(limit), f"{abs(value - limit):.6e}")
    emit(("probe", "argument", "value", "limit", "gap"), [row], args.format, out)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="firstdigit", description="First-digit probability tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, decimals=8):
        p.add_argument("--format", choices=("csv", "text"), default="csv")
        p.add_argument("--decimals", type=int, default=decimals,
                       help="decimal places for probabilities")

    p = sub.add_parser("analytic", help="closed-form P_k table for a function family")
    add_family_args(p)
    p.add_argument("--decade", type=_count, default=1, help="decade n of [10^(n-1), 10^n)")
    common(p)
    p.set_defaults(run=cmd_analytic)

    p = sub.add_parser("scenario", help="reproduce a worked application")
    p.add_argument("name", choices=[s.value for s in scenarios.ScenarioId])
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--rows", action="store_true", help="full sampled value table")
    mode.add_argument("--summary", action="store_true", help="digit comparison (default)")
    common(p)
    p.set_defaults(run=cmd_scenario)

    p = sub.add_parser("sequence", help="leading digits of primes, Fibonacci, factorial")
    p.add_argument("kind", choices=("primes", "fibonacci", "factorial"))
    p.add_argument("--limit", type=_count, default=10**6, help="primes below this bound")
    p.add_argument("--count", type=_count, default=500, help="number of terms")
    p.add_argument("--method", choices=("exact", "logsum"), default="exact")
    common(p)
    p.set_defaults(run=cmd_sequence)

    p = sub.add_parser("empirical", help="sample a family on a grid and compare")
    add_family_args(p)
    p.add_argument("--start", type=_number, required=True)
    p.add_argument("--step", type=_number, required=True)
    p.add_argument("--count", type=_count, required=True)
    p.add_argument("--lo", type=_number, default=1.0)
    p.add_argument("--hi", type=_number, default=math.inf)
    p.add_argument("--include-hi", action="store_true", help="treat hi as inclusive")
    common(p)
    p.set_defaults(run=cmd_empirical)

    p = sub.add_parser("limits", help="asymptotic probes and their gaps")
    p.add_argument("probe", choices=("power-p1", "fib-ratio", "stirling"))
    p.add_argument("--a", type=_number, default=1e6, help="power exponent for power-p1")
    p.add_argument("--n", type=_count, default=500, help="index for fib-ratio")
    p.add_argument("--x", type=_count, default=2000, help="argument for stirling")
    common(p)
    p.set_defaults(run=cmd_limits)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.run(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"firstdigit: error: {exc}\n")
        return 2
    except Exception as exc:  # noqa: BLE001
        err.write(f"firstdigit: internal failure: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
