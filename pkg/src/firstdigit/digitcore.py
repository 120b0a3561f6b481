"""Leading-digit extraction and the decade partition of [1, inf).

Every decade [10**(n-1), 10**n) splits into nine equal half-open pieces
[k * 10**(n-1), (k+1) * 10**(n-1)), one per leading digit k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from numbers import Integral, Real
from typing import Iterable, Sequence

DIGITS = range(1, 10)


def check_digit(k) -> int:
    if isinstance(k, bool) or not isinstance(k, Integral) or not 1 <= k <= 9:
        raise ValueError(f"digit must be an integer in 1..9, got {k!r}")
    return int(k)


def check_decade(n) -> int:
    if isinstance(n, bool) or not isinstance(n, Integral) or n < 1:
        raise ValueError(f"decade scale must be an integer >= 1, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class DigitCounts:
    """Tallies of leading digits 1..9."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != 9:
            raise ValueError(f"need nine counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("counts must be non-negative")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[check_digit(k) - 1]

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "DigitCounts":
        tally = [0] * 9
        for d in digits:
            tally[check_digit(d) - 1] += 1
        return cls(tuple(tally))


@dataclass(frozen=True)
class DigitDistribution:
    """Nine probabilities indexed by leading digit 1..9."""

    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if len(probs) != 9:
            raise ValueError(f"need nine probabilities, got {len(probs)}")
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise ValueError(f"probabilities must lie in [0, 1]: {probs}")
        if abs(math.fsum(probs) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {math.fsum(probs)!r}, not 1")
        object.__setattr__(self, "probs", probs)

    def __getitem__(self, k: int) -> float:
        return self.probs[check_digit(k) - 1]

    def __iter__(self):
        return iter(self.probs)

    def __len__(self) -> int:
        return 9


def leading_digit(x) -> int:
    """Leading decimal digit of ``x >= 1``.

    Floats are read from their shortest round-trip decimal rendering
    (``repr``). That rendering identifies the stored binary64 value uniquely,
    so a value one ulp below a digit edge still reads as ``1.9999999999999998``
    and never as ``2``, while a literal such as ``1e37`` keeps its digit 1.
    Integers are inspected exactly.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a number here")
    if isinstance(x, Integral):
        if x < 1:
            raise ValueError(f"leading digit needs x >= 1, got {x}")
        return Decimal(int(x)).as_tuple().digits[0]
    if not isinstance(x, Real):
        raise TypeError(f"expected a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"leading digit needs a finite value, got {x}")
    if x < 1.0:
        raise ValueError(f"leading digit needs x >= 1, got {x}")
    return Decimal(repr(x)).as_tuple().digits[0]


def leading_digit_of_bignat(v) -> int:
    if v.is_zero():
        raise ValueError("zero has no leading digit in 1..9")
    return v.leading_digit()


def decade_subinterval(n: int, k: int) -> tuple[float, float]:
    """Half-open bounds ``[lo, hi)`` of digit ``k`` in decade ``n``."""
    n, k = check_decade(n), check_digit(k)
    unit = 10 ** (n - 1)
    return float(k * unit), float((k + 1) * unit)


def decade_of(x: float) -> int:
    """Decade index n with ``10**(n-1) <= x < 10**n``."""
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    exact = Decimal(int(x)) if isinstance(x, Integral) else Decimal(repr(float(x)))
    return exact.adjusted() + 1


def counts_to_distribution(c: DigitCounts) -> DigitDistribution:
    total = c.total
    if total == 0:
        raise ValueError("cannot form frequencies from an empty sample")
    return DigitDistribution(tuple(k / total for k in c.counts))


def distribution(probs: Sequence[float]) -> DigitDistribution:
    return DigitDistribution(tuple(probs))
