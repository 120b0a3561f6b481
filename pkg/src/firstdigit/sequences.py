"""Leading digits of primes, Fibonacci numbers and factorials.

Fibonacci numbers and factorials are carried exactly as :class:`BigNat`;
a floating log-sum path for factorials exists as a cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .bignat import BigNat, bignat_add, bignat_mul_small
from .digitcore import DigitCounts, leading_digit

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
_LOG10_DIGIT_EDGES = [math.log10(d) for d in range(1, 11)]


def _check_count(count, name="count") -> int:
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise ValueError(f"{name} must be a positive integer, got {count!r}")
    return int(count)


# ------------------------------------------------------------------ primes

def sieve_primes(limit: int) -> np.ndarray:
    """All primes ``<= limit`` in ascending order (sieve of Eratosthenes)."""
    if isinstance(limit, bool) or int(limit) != limit or limit < 2:
        raise ValueError(f"limit must be an integer >= 2, got {limit!r}")
    limit = int(limit)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_prime[p]:
            is_prime[p * p::2 * p] = False
    return np.flatnonzero(is_prime)


def _int_leading_digits(values: np.ndarray) -> np.ndarray:
    # exact for non-negative integers below 2**53: compare against powers of ten
    values = np.asarray(values, dtype=np.int64)
    power = np.ones_like(values)
    while True:
        grow = power * 10 <= values
        if not grow.any():
            break
        power[grow] *= 10
    return values // power


def prime_digit_counts(limit: int) -> DigitCounts:
    """Leading-digit tallies over the primes in ``[1, limit)``."""
    primes = sieve_primes(limit)
    primes = primes[primes < limit]
    tally = np.bincount(_int_leading_digits(primes), minlength=10)[1:10]
    return DigitCounts(tuple(int(c) for c in tally))


# --------------------------------------------------------------- Fibonacci

def fibonacci_numbers(count: int) -> Iterator[BigNat]:
    """Yield ``F_1 .. F_count`` with ``F_1 = F_2 = 1``."""
    count = _check_count(count)
    a, b = BigNat(1), BigNat(1)
    for _ in range(count):
        yield a
        a, b = b, bignat_add(a, b)


def fibonacci_leading_digits(count: int) -> list[int]:
    return [f.leading_digit() for f in fibonacci_numbers(count)]


def fibonacci_ratio(n: int, significant: int = 30) -> float:
    """``F_(n+1) / F_n`` from the leading digits of both numbers."""
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    *_, fn, fn1 = fibonacci_numbers(int(n) + 1)
    cut = max(fn.num_digits() - significant, 0)
    # same number of dropped low digits on both sides keeps the scale
    num = fn1.prefix(fn1.num_digits() - cut)
    den = fn.prefix(fn.num_digits() - cut)
    return num / den


# --------------------------------------------------------------- factorial

def factorials(count: int) -> Iterator[BigNat]:
    """Yield ``1!, 2!, ..., count!`` exactly."""
    count = _check_count(count)
    f = BigNat(1)
    for x in range(1, count + 1):
        f = bignat_mul_small(f, x)
        yield f


@dataclass(frozen=True)
class LogSumDigits:
    digits: list[int]
    low_confidence: list[int]  # x values whose log-fraction is near a digit edge


def factorial_logsum_digits(count: int, margin: float = 1e-9) -> LogSumDigits:
    """Leading digits of ``x!`` from a running binary64 sum of ``log10(i)``.

    Any ``x`` whose fractional part lies within ``margin`` of some
    ``log10(d)`` is listed as low confidence.
    """
    count = _check_count(count)
    digits, flagged = [], []
    total = 0.0
    for x in range(1, count + 1):
        total += math.log10(x)
        frac = total - math.floor(total)
        digits.append(leading_digit(10.0**frac))
        if min(abs(frac - edge) for edge in _LOG10_DIGIT_EDGES) < margin:
            flagged.append(x)
    return LogSumDigits(digits, flagged)


def factorial_leading_digits(count: int, method: str = "exact") -> list[int]:
    """Leading digits of ``1! .. count!``; ``method`` is ``exact`` or ``logsum``."""
    if method == "exact":
        return [f.leading_digit() for f in factorials(count)]
    if method == "logsum":
        return factorial_logsum_digits(count).digits
    raise ValueError(f"unknown method {method!r}; use 'exact' or 'logsum'")


def stirling_ratio(x: int) -> float:
    """``x! / (sqrt(2 pi x) (x/e)**x)``, evaluated in log space."""
    x = _check_count(x, "x")
    log_fact = math.fsum(math.log(i) for i in range(2, x + 1))
    return math.exp(log_fact - 0.5 * math.log(2 * math.pi * x) - x * (math.log(x) - 1.0))


# ---------------------------------------------------------- sequence kinds

@dataclass(frozen=True)
class Primes:
    limit: int

    def __post_init__(self):
        if self.limit < 2:
            raise ValueError(f"limit must be >= 2, got {self.limit}")


@dataclass(frozen=True)
class Fibonacci:
    count: int

    def __post_init__(self):
        _check_count(self.count)


@dataclass(frozen=True)
class Factorial:
    count: int
    method: str = "exact"

    def __post_init__(self):
        _check_count(self.count)


SequenceKind = Union[Primes, Fibonacci, Factorial]


def sequence_digit_counts(kind: SequenceKind) -> DigitCounts:
    if isinstance(kind, Primes):
        return prime_digit_counts(kind.limit)
    if isinstance(kind, Fibonacci):
        return DigitCounts.from_digits(fibonacci_leading_digits(kind.count))
    if isinstance(kind, Factorial):
        return DigitCounts.from_digits(factorial_leading_digits(kind.count, kind.method))
    raise TypeError(f"unknown sequence kind: {kind!r}")
