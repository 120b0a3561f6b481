"""Tally leading digits of a function sampled on a uniform grid."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .digitcore import DigitCounts, leading_digit


@dataclass(frozen=True)
class SampleSpec:
    """Grid ``start + i * step`` for ``i = 0 .. count - 1``."""

    start: float
    step: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.step)):
            raise ValueError("grid start and step must be finite")
        if self.step <= 0:
            raise ValueError(f"step must be positive, got {self.step}")
        if int(self.count) != self.count or self.count < 1:
            raise ValueError(f"count must be a positive integer, got {self.count}")

    def points(self) -> list[float]:
        # computed from the integer index, never accumulated
        return [self.start + i * self.step for i in range(int(self.count))]


@dataclass(frozen=True)
class RangeFilter:
    """Measurement window ``[lo, hi)``, or ``[lo, hi]`` with ``include_hi``."""

    lo: float = 1.0
    hi: float = math.inf
    include_hi: bool = False

    def __post_init__(self):
        if not self.lo >= 1:
            raise ValueError(f"filter lower bound must be >= 1, got {self.lo}")
        if not self.hi > self.lo:
            raise ValueError(f"filter needs hi > lo, got [{self.lo}, {self.hi})")

    def __contains__(self, y: float) -> bool:
        if y < self.lo:
            return False
        return y <= self.hi if self.include_hi else y < self.hi


class SampleRow(NamedTuple):
    x: float
    y: float
    digit: Optional[int]  # None when y falls outside the filter

    @property
    def excluded(self) -> bool:
        return self.digit is None


def tabulate(xs, ys, filt: RangeFilter) -> list[SampleRow]:
    rows = []
    for x, y in zip(xs, ys):
        if not math.isfinite(y):
            raise ValueError(f"non-finite function value {y!r} at x={x!r}")
        rows.append(SampleRow(x, y, leading_digit(y) if y in filt else None))
    return rows


def sample_table(f: Callable[[float], float], spec: SampleSpec,
                 filt: RangeFilter) -> list[SampleRow]:
    """One row per grid point, in grid order; out-of-window rows carry no digit."""
    xs = spec.points()
    return tabulate(xs, [float(f(x)) for x in xs], filt)


def rows_to_counts(rows) -> DigitCounts:
    return DigitCounts.from_digits(r.digit for r in rows if r.digit is not None)


def sample_digit_counts(f: Callable[[float], float], spec: SampleSpec,
                        filt: RangeFilter) -> DigitCounts:
    return rows_to_counts(sample_table(f, spec, filt))
