"""Exact non-negative integers stored as decimal digits.

Only addition and multiplication by a small factor are supported, which is
all the Fibonacci and factorial generators need. Digits live in a numpy
array, least significant first; carries are resolved with vectorized
passes rather than a per-digit Python loop.

Zero is represented canonically by the single digit 0.
"""
from __future__ import annotations

from numbers import Integral

import numpy as np

MAX_FACTOR = 10**6


def _normalize(work: np.ndarray) -> np.ndarray:
    # work holds non-negative int64 "digits" that may exceed 9
    while True:
        carry = work // 10
        if not carry.any():
            break
        work = work % 10
        if carry[-1]:
            work = np.append(work, 0)
        work[1:] += carry[: len(work) - 1]
    nz = np.flatnonzero(work)
    top = nz[-1] + 1 if nz.size else 1
    return work[:top]


class BigNat:
    """Immutable exact natural number in base 10."""

    __slots__ = ("_le",)

    def __init__(self, value="0"):
        if isinstance(value, BigNat):
            self._le = value._le
            return
        if isinstance(value, bool):
            raise TypeError("bool is not a BigNat")
        if isinstance(value, Integral):
            if value < 0:
                raise ValueError("BigNat cannot be negative")
            value = _int_to_digit_string(int(value))
        if not isinstance(value, str) or not value or not value.isdigit():
            raise ValueError(f"not a decimal digit string: {value!r}")
        le = np.frombuffer(value.encode("ascii"), dtype=np.uint8)[::-1].astype(np.int64)
        le = le - ord("0")
        nz = np.flatnonzero(le)
        le = le[: nz[-1] + 1] if nz.size else np.zeros(1, dtype=np.int64)
        le.setflags(write=False)
        self._le = le

    @classmethod
    def _wrap(cls, le: np.ndarray) -> "BigNat":
        obj = cls.__new__(cls)
        le.setflags(write=False)
        obj._le = le
        return obj

    @property
    def digits(self) -> tuple[int, ...]:
        """Decimal digits, most significant first."""
        return tuple(int(d) for d in self._le[::-1])

    def num_digits(self) -> int:
        return len(self._le)

    def is_zero(self) -> bool:
        return len(self._le) == 1 and self._le[0] == 0

    def leading_digit(self) -> int:
        return int(self._le[-1])

    def prefix(self, count: int) -> int:
        """Integer formed by the ``count`` most significant digits."""
        top = self._le[::-1][:count]
        return int("".join(map(str, top.tolist())))

    def __str__(self) -> str:
        return "".join(map(str, self._le[::-1].tolist()))

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 40:
            s = f"{s[:20]}...{s[-10:]} ({len(s)} digits)"
        return f"BigNat({s!r})"

    def __int__(self) -> int:
        value = 0
        for start in range(0, len(self._le), 18):
            chunk = self._le[::-1][start:start + 18]
            value = value * 10 ** len(chunk) + int("".join(map(str, chunk.tolist())))
        return value

    def __eq__(self, other) -> bool:
        if isinstance(other, Integral) and not isinstance(other, bool):
            other = BigNat(other) if other >= 0 else None
        if not isinstance(other, BigNat):
            return NotImplemented
        return np.array_equal(self._le, other._le)

    def __hash__(self) -> int:
        return hash(self._le.tobytes())

    def __add__(self, other):
        if not isinstance(other, BigNat):
            return NotImplemented
        return bignat_add(self, other)

    def __mul__(self, s):
        if not isinstance(s, Integral):
            return NotImplemented
        return bignat_mul_small(self, s)


def _int_to_digit_string(v: int) -> str:
    if v < 10**4000:
        return str(v)
    # str() refuses very long ints; split by halves
    chunks = []
    while v:
        v, r = divmod(v, 10**3000)
        chunks.append(r)
    out = str(chunks[-1])
    for r in reversed(chunks[:-1]):
        out += str(r).rjust(3000, "0")
    return out


def bignat_add(a: BigNat, b: BigNat) -> BigNat:
    la, lb = a._le, b._le
    if len(la) < len(lb):
        la, lb = lb, la
    work = la.copy()
    work[: len(lb)] += lb
    return BigNat._wrap(_normalize(work))


def bignat_mul_small(a: BigNat, s: int) -> BigNat:
    """Product of ``a`` and an integer factor ``1 <= s <= 10**6``."""
    if isinstance(s, bool) or not isinstance(s, Integral):
        raise TypeError("factor must be an integer")
    if not 1 <= s <= MAX_FACTOR:
        raise ValueError(f"factor must be in 1..{MAX_FACTOR}, got {s}")
    if s == 1:
        return a
    return BigNat._wrap(_normalize(a._le * int(s)))
