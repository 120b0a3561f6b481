"""Closed-form first-digit probabilities for six continuous function families.

For a strictly monotone ``f`` whose values sweep a decade
``[10**(n-1), 10**n)``, the share of the domain that lands on leading digit
``k`` is the share of the inverse image::

    P_k = |g((k+1) 10**(n-1)) - g(k 10**(n-1))| / |g(10**n) - g(10**(n-1))|

with ``g`` the inverse of ``f``. :func:`generic_pk` evaluates that ratio
for any inverse; the ``*_pk`` functions are its closed forms.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .digitcore import DIGITS, DigitDistribution, check_decade, check_digit

LOG10_2 = math.log10(2.0)


def _require_above_one(value: float, name: str) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value)) or value <= 1:
        raise ValueError(f"{name} must exceed 1, got {value!r}")
    return float(value)


def _require_positive(value: float, name: str) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value)) or value <= 0:
        raise ValueError(f"{name} must be positive, got {value!r}")
    return float(value)


# ---------------------------------------------------------------- families

@dataclass(frozen=True)
class Exponential:
    """``y = scale * base ** (rate * x)``."""

    base: float = math.e
    scale: float = 1.0
    rate: float = 1.0

    def __post_init__(self):
        _require_above_one(self.base, "base")
        _require_positive(self.scale, "scale")
        _require_positive(self.rate, "rate")

    def forward(self, x):
        return self.scale * np.power(self.base, self.rate * np.asarray(x, dtype=float))

    def inverse(self, y):
        return np.log(np.asarray(y, dtype=float) / self.scale) / (self.rate * math.log(self.base))


@dataclass(frozen=True)
class Power:
    """``y = scale * x ** exponent``."""

    exponent: float = 2.0
    scale: float = 1.0

    def __post_init__(self):
        _require_above_one(self.exponent, "exponent")
        _require_positive(self.scale, "scale")

    def forward(self, x):
        return self.scale * np.power(np.asarray(x, dtype=float), self.exponent)

    def inverse(self, y):
        return np.power(np.asarray(y, dtype=float) / self.scale, 1.0 / self.exponent)


@dataclass(frozen=True)
class Linear:
    """``y = slope * x``."""

    slope: float = 1.0

    def __post_init__(self):
        _require_positive(self.slope, "slope")

    def forward(self, x):
        return self.slope * np.asarray(x, dtype=float)

    def inverse(self, y):
        return np.asarray(y, dtype=float) / self.slope


@dataclass(frozen=True)
class Root:
    """``y = scale * x ** (1 / index)``."""

    index: float = 2.0
    scale: float = 1.0

    def __post_init__(self):
        _require_above_one(self.index, "index")
        _require_positive(self.scale, "scale")

    def forward(self, x):
        return self.scale * np.power(np.asarray(x, dtype=float), 1.0 / self.index)

    def inverse(self, y):
        return np.power(np.asarray(y, dtype=float) / self.scale, self.index)


@dataclass(frozen=True)
class Logarithmic:
    """``y = log_base(x / shift) / stretch``.

    Stretching by ``stretch`` acts like replacing the base by
    ``base ** stretch``; the inner scale ``shift`` only moves the curve up
    or down and never changes the digit probabilities.
    """

    base: float = 2.0
    stretch: float = 1.0
    shift: float = 1.0

    def __post_init__(self):
        _require_above_one(self.base, "base")
        _require_positive(self.stretch, "stretch")
        _require_positive(self.shift, "shift")

    @property
    def log_effective_base(self) -> float:
        return self.stretch * math.log(self.base)

    @property
    def effective_base(self) -> float:
        return math.exp(self.log_effective_base)

    def forward(self, x):
        return np.log(np.asarray(x, dtype=float) / self.shift) / self.log_effective_base

    def inverse(self, y):
        return self.shift * np.exp(self.log_effective_base * np.asarray(y, dtype=float))


@dataclass(frozen=True)
class Reciprocal:
    """``y = numerator / (x - hshift)``, decreasing for ``x > hshift``."""

    numerator: float = 1.0
    hshift: float = 0.0

    def __post_init__(self):
        _require_positive(self.numerator, "numerator")
        if not math.isfinite(self.hshift):
            raise ValueError(f"hshift must be finite, got {self.hshift!r}")

    def forward(self, x):
        return self.numerator / (np.asarray(x, dtype=float) - self.hshift)

    def inverse(self, y):
        return self.numerator / np.asarray(y, dtype=float) + self.hshift


FunctionFamily = Union[Exponential, Power, Linear, Root, Logarithmic, Reciprocal]
FAMILIES = (Exponential, Power, Linear, Root, Logarithmic, Reciprocal)


class TrendClass(enum.Enum):
    DECREASING_PK = "decreasing"
    CONSTANT_PK = "constant"
    INCREASING_PK = "increasing"


# ------------------------------------------------------------ closed forms

def benford_pk(k: int) -> float:
    k = check_digit(k)
    return math.log10((k + 1) / k)


def power_pk(a: float, k: int) -> float:
    a = _require_above_one(a, "exponent")
    k = check_digit(k)
    r = 1.0 / a
    return ((k + 1) ** r - k**r) / (10.0**r - 1.0)


def linear_pk(k: int) -> float:
    check_digit(k)
    return 1.0 / 9.0


def root_pk(a: float, k: int) -> float:
    a = _require_above_one(a, "index")
    k = check_digit(k)
    if a.is_integer() and a < 60:
        # exact integer arithmetic keeps 2k+1 over 99 etc. correctly rounded
        n = int(a)
        return ((k + 1) ** n - k**n) / (10**n - 1)
    return ((k + 1) ** a - k**a) / (10.0**a - 1.0)


def _log_pk_from_log_base(log_base: float, n: int, k: int) -> float:
    # P_k = 1 / sum_i base**((i - k) * 10**(n-1)), summed in log space
    exponents = (np.arange(1, 10) - k) * (log_base * 10.0 ** (n - 1))
    top = exponents.max()
    log_total = top + math.log(np.exp(exponents - top).sum())
    return math.exp(-log_total)


def log_pk(a: float, n: int, k: int) -> float:
    """Digit probability of ``log_a`` over decade ``n``.

    Evaluated through exponent differences, so decades where
    ``a ** (9 * 10**(n-1))`` overflows binary64 still work.
    """
    a = _require_above_one(a, "base")
    return _log_pk_from_log_base(math.log(a), check_decade(n), check_digit(k))


def reciprocal_pk(k: int) -> float:
    k = check_digit(k)
    return 10.0 / (9 * k * (k + 1))


def power_p1(a: float) -> float:
    """``P_1`` of ``x**a``; rises towards ``log10(2)`` as ``a`` grows."""
    a = _require_above_one(a, "exponent")
    r = 1.0 / a
    # expm1 keeps precision when 1/a is tiny
    return math.expm1(r * math.log(2.0)) / math.expm1(r * math.log(10.0))


def analytic_distribution(f: FunctionFamily, n: int = 1) -> DigitDistribution:
    """Closed-form digit distribution of family ``f`` over decade ``n``.

    Only the logarithmic family depends on ``n``.
    """
    n = check_decade(n)
    if isinstance(f, Exponential):
        probs = [benford_pk(k) for k in DIGITS]
    elif isinstance(f, Power):
        probs = [power_pk(f.exponent, k) for k in DIGITS]
    elif isinstance(f, Linear):
        probs = [linear_pk(k) for k in DIGITS]
    elif isinstance(f, Root):
        probs = [root_pk(f.index, k) for k in DIGITS]
    elif isinstance(f, Logarithmic):
        probs = [_log_pk_from_log_base(f.log_effective_base, n, k) for k in DIGITS]
    elif isinstance(f, Reciprocal):
        probs = [reciprocal_pk(k) for k in DIGITS]
    else:
        raise TypeError(f"unknown function family: {f!r}")
    return DigitDistribution(tuple(probs))


# --------------------------------------------------------- generic formula

def generic_pk(inv: Callable[[float], float], n: int, k: int) -> float:
    """Digit probability from the inverse map over decade ``n``.

    Absolute values make this valid for decreasing functions too.
    """
    n, k = check_decade(n), check_digit(k)
    unit = 10.0 ** (n - 1)
    num = abs(float(inv((k + 1) * unit)) - float(inv(k * unit)))
    den = abs(float(inv(10 * unit)) - float(inv(unit)))
    if den == 0.0:
        raise ValueError("inverse is constant on the decade")
    return num / den


def invert_monotone(f: Callable[[float], float], y: float,
                    bracket: tuple[float, float], tol: float = 1e-12) -> float:
    """Solve ``f(x) = y`` by bisection on a bracketing interval.

    ``tol`` is relative to the initial bracket width.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ValueError("bracket must satisfy lo < hi")
    flo, fhi = float(f(lo)) - y, float(f(hi)) - y
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"f(lo) and f(hi) do not bracket y={y}")
    width = (hi - lo) * tol
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = float(f(mid)) - y
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def generic_pk_forward(f: Callable[[float], float], n: int, k: int,
                       bracket: tuple[float, float], tol: float = 1e-12) -> float:
    """:func:`generic_pk` for a forward map, inverting it by bisection."""
    return generic_pk(lambda y: invert_monotone(f, y, bracket, tol), n, k)


# ----------------------------------------------------------------- trends

_TREND_TABLE = {
    Exponential: TrendClass.DECREASING_PK,
    Power: TrendClass.DECREASING_PK,
    Reciprocal: TrendClass.DECREASING_PK,
    Linear: TrendClass.CONSTANT_PK,
    Root: TrendClass.INCREASING_PK,
    Logarithmic: TrendClass.INCREASING_PK,
}


def curvature_signs(f: FunctionFamily) -> list[int]:
    """Signs of centred second differences of ``f`` at three interior points.

    Points are taken where ``f`` equals 2, 4 and 8, so every family is
    probed inside its own first decade of values.
    """
    signs = []
    for y in (2.0, 4.0, 8.0):
        x = float(f.inverse(y))
        # step stays inside the preimage of [y/1.2, 1.2y], so inside the domain
        h = 0.25 * min(abs(float(f.inverse(1.2 * y)) - x), abs(x - float(f.inverse(y / 1.2))))
        left, mid, right = (float(f.forward(x + d)) for d in (-h, 0.0, h))
        if not all(map(math.isfinite, (left, mid, right))):
            raise ArithmeticError(f"second difference of {f!r} is not finite near y={y}")
        d2 = left - 2.0 * mid + right
        scale = abs(left) + abs(mid) + abs(right)
        signs.append(0 if abs(d2) <= 1e-9 * scale else (1 if d2 > 0 else -1))
    return signs


def trend_classify(f: FunctionFamily) -> TrendClass:
    """How ``P_k`` moves with ``k`` for family ``f``.

    Convex curves (positive second derivative) favour small digits, concave
    curves favour large ones, straight lines give all digits equal weight.
    The table answer is cross-checked against :func:`curvature_signs`.
    """
    try:
        expected = _TREND_TABLE[type(f)]
    except KeyError:
        raise TypeError(f"unknown function family: {f!r}") from None
    signs = set(curvature_signs(f))
    numeric = {frozenset({1}): TrendClass.DECREASING_PK,
               frozenset({0}): TrendClass.CONSTANT_PK,
               frozenset({-1}): TrendClass.INCREASING_PK}.get(frozenset(signs))
    if numeric is not expected:
        raise ArithmeticError(
            f"curvature check gives {numeric} but {type(f).__name__} is {expected}")
    return expected
