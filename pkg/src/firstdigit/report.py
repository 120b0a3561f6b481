"""Distances between digit distributions and fixed-layout comparison tables."""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .digitcore import DIGITS, DigitCounts, DigitDistribution, counts_to_distribution


def max_abs_diff(p: DigitDistribution, q: DigitDistribution) -> float:
    return max(abs(a - b) for a, b in zip(p, q))


def l1_distance(p: DigitDistribution, q: DigitDistribution) -> float:
    return math.fsum(abs(a - b) for a, b in zip(p, q))


def chi_square(c: DigitCounts, ref: DigitDistribution) -> float:
    """Pearson statistic of observed counts against reference probabilities."""
    total = c.total
    if total == 0:
        raise ValueError("chi-square needs at least one observation")
    if any(p <= 0 for p in ref):
        raise ValueError("reference distribution has an empty cell")
    return math.fsum((obs - total * p) ** 2 / (total * p) for obs, p in zip(c.counts, ref))


@dataclass(frozen=True)
class Comparison:
    counts: DigitCounts
    empirical: DigitDistribution
    reference: DigitDistribution
    max_abs: float
    l1: float
    chi_square: float


def compare(c: DigitCounts, ref: DigitDistribution) -> Comparison:
    emp = counts_to_distribution(c)
    return Comparison(c, emp, ref, max_abs_diff(emp, ref), l1_distance(emp, ref),
                      chi_square(c, ref))


def fixed(value: float, decimals: int = 8) -> str:
    """Fixed-point text rounded half away from zero.

    Rounds the shortest repr of ``value``, so 0.2955 prints as ``0.296``
    at three places, the way a person reading the number would round it.
    """
    q = Decimal(1).scaleb(-decimals)
    return format(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP), "f")


COMPARISON_HEADER = ("digit", "count", "frequency", "reference")


def comparison_table(c: DigitCounts, ref: DigitDistribution, decimals: int = 8,
                     ref_decimals: int = 8) -> list[tuple[str, ...]]:
    """Nine digit rows plus a sum row, all cells as text.

    ``decimals`` sets the frequency column precision; the reference column
    keeps ``ref_decimals`` independently (five and eight for the factorial
    table, for instance).
    """
    emp = counts_to_distribution(c)
    rows = [(str(k), str(c[k]), fixed(emp[k], decimals), fixed(ref[k], ref_decimals))
            for k in DIGITS]
    rows.append(("sum", str(c.total), fixed(1.0, decimals), fixed(1.0, ref_decimals)))
    return rows


def distribution_table(columns: dict[str, DigitDistribution],
                       decimals: int = 8) -> tuple[tuple[str, ...], list[tuple[str, ...]]]:
    """Header and rows for one or more probability columns side by side."""
    header = ("digit", *columns)
    rows = [(str(k), *(fixed(dist[k], decimals) for dist in columns.values()))
            for k in DIGITS]
    rows.append(("sum", *(fixed(math.fsum(dist), decimals) for dist in columns.values())))
    return header, rows
