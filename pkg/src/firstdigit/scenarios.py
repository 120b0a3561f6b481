"""Six worked applications, one per continuous family.

Each scenario freezes its formula, grid, measurement window and the digit
counts that grid must produce. ``run_scenario`` recomputes the counts and
raises if they ever drift from the frozen values.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Optional

from .analytic import (Exponential, FunctionFamily, Linear, Logarithmic, Power,
                       Reciprocal, Root, analytic_distribution)
from .digitcore import DigitCounts, DigitDistribution
from .empirical import RangeFilter, SampleRow, SampleSpec, rows_to_counts, sample_table, tabulate


class ScenarioId(enum.Enum):
    BACTERIAL = "bacterial"
    FREE_FALL = "freefall"
    POOL = "pool"
    HEIGHT = "height"
    POPULATION = "population"
    SCUBA = "scuba"


@dataclass(frozen=True)
class ScenarioDefinition:
    id: ScenarioId
    formula: str
    x_label: str
    y_label: str
    filter: RangeFilter
    expected_counts: DigitCounts
    reference_family: FunctionFamily
    func: Optional[Callable[[float], float]] = None
    spec: Optional[SampleSpec] = None
    fixture: Optional[str] = None
    decade: int = 1  # decade used for the reference distribution


def load_fixture(name: str) -> list[tuple[float, float]]:
    """Two-column ``x y`` fixture shipped in ``firstdigit/data``."""
    text = resources.files("firstdigit").joinpath("data", name).read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        x, y = line.split()
        rows.append((float(x), float(y)))
    return rows


def height_fixture() -> list[tuple[float, float]]:
    """Monthly height gain of boys, in eighth-centimetre units (217 rows)."""
    return load_fixture("height_growth.txt")


def height_measurements() -> list[tuple[float, float]]:
    """The sparse source measurements (month, height in cm) behind the fixture."""
    return load_fixture("height_measured.txt")


def _bacteria(t):
    return 300.0 * math.exp(0.4 * t)


def _free_fall(t):
    return 16.1 * t * t


def _pool(t):
    return 5.0 * t


def _population(p):
    return 40.0 * math.log(p / 1600.0)


def _scuba(d):
    return 525.0 / (d - 10.0)


_DEFINITIONS = {
    ScenarioId.BACTERIAL: ScenarioDefinition(
        id=ScenarioId.BACTERIAL,
        formula="N(t) = 300 e^(0.4 t)",
        x_label="hours", y_label="bacteria",
        func=_bacteria,
        spec=SampleSpec(start=1.0, step=1.0, count=200),
        # t = 199, 200 open the decade [1e37, 1e38) without filling it
        filter=RangeFilter(1.0, 1e37),
        expected_counts=DigitCounts((59, 34, 25, 19, 17, 13, 12, 10, 9)),
        reference_family=Exponential(base=math.e, scale=300.0, rate=0.4),
    ),
    ScenarioId.FREE_FALL: ScenarioDefinition(
        id=ScenarioId.FREE_FALL,
        formula="D(t) = 16.1 t^2",
        x_label="seconds", y_label="feet",
        func=_free_fall,
        spec=SampleSpec(start=0.05, step=0.05, count=158),
        filter=RangeFilter(1.0, 1000.0, include_hi=True),
        expected_counts=DigitCounts((31, 22, 18, 18, 15, 13, 13, 12, 11)),
        reference_family=Power(exponent=2.0, scale=16.1),
    ),
    ScenarioId.POOL: ScenarioDefinition(
        id=ScenarioId.POOL,
        formula="V(t) = 5 t",
        x_label="minutes", y_label="cubic feet",
        func=_pool,
        spec=SampleSpec(start=1.0, step=1.0, count=200),
        # the lone value in [1, 10) cannot represent its decade
        filter=RangeFilter(10.0, 1000.0),
        expected_counts=DigitCounts((22,) * 9),
        reference_family=Linear(slope=5.0),
    ),
    ScenarioId.HEIGHT: ScenarioDefinition(
        id=ScenarioId.HEIGHT,
        formula="height gain in 1/8 cm (tabulated)",
        x_label="months", y_label="eighth-cm",
        fixture="height_growth.txt",
        filter=RangeFilter(1.0, 1010.0),
        expected_counts=DigitCounts((8, 16, 22, 23, 25, 28, 26, 23, 46)),
        reference_family=Root(index=2.0, scale=65.32),
    ),
    ScenarioId.POPULATION: ScenarioDefinition(
        id=ScenarioId.POPULATION,
        formula="T(p) = 40 ln(p / 1600)",
        x_label="people", y_label="years",
        func=_population,
        spec=SampleSpec(start=1640.0, step=1.0, count=416),
        filter=RangeFilter(1.0, 10.0),
        expected_counts=DigitCounts((42, 42, 44, 45, 45, 47, 49, 49, 51)),
        reference_family=Logarithmic(base=math.e, stretch=0.025, shift=1600.0),
    ),
    ScenarioId.SCUBA: ScenarioDefinition(
        id=ScenarioId.SCUBA,
        formula="t(d) = 525 / (d - 10)",
        x_label="metres", y_label="minutes",
        func=_scuba,
        spec=SampleSpec(start=15.0, step=1.0, count=521),
        filter=RangeFilter(1.0, 100.0),
        expected_counts=DigitCounts((289, 96, 48, 29, 20, 13, 11, 8, 6)),
        reference_family=Reciprocal(numerator=525.0, hshift=10.0),
    ),
}


class ScenarioMismatch(AssertionError):
    """Recomputed counts differ from the frozen ones."""


@dataclass(frozen=True)
class ScenarioResult:
    definition: ScenarioDefinition
    rows: list[SampleRow]
    counts: DigitCounts
    reference: DigitDistribution


def scenario_id(name) -> ScenarioId:
    if isinstance(name, ScenarioId):
        return name
    try:
        return ScenarioId(str(name).lower().replace("-", "").replace("_", ""))
    except ValueError:
        known = ", ".join(s.value for s in ScenarioId)
        raise ValueError(f"unknown scenario {name!r}; choose from {known}") from None


def scenario_definition(id) -> ScenarioDefinition:
    return _DEFINITIONS[scenario_id(id)]


def run_scenario(id) -> ScenarioResult:
    d = scenario_definition(id)
    if d.fixture is not None:
        data = load_fixture(d.fixture)
        rows = tabulate([x for x, _ in data], [y for _, y in data], d.filter)
    else:
        rows = sample_table(d.func, d.spec, d.filter)
    counts = rows_to_counts(rows)
    if counts != d.expected_counts:
        raise ScenarioMismatch(
            f"{d.id.value}: counts {counts.counts} != frozen {d.expected_counts.counts}")
    reference = analytic_distribution(d.reference_family, d.decade)
    return ScenarioResult(d, rows, counts, reference)
