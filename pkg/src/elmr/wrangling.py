"""Normalize raw payloads into typed monthly series and derive new datasets.

Missing months are always explicit nulls, never interpolated: nulls preserve
truth for charts (line breaks) and propagate cleanly through derived series.
An optional linear-interpolation mode exists behind a flag for callers who
want filled estimates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .ingestion import RawObservation
    from .store import Store


class AlreadyDerived(ValueError):
    """Raised when a derived-series computation is fed a non-raw series."""


class RangeOutOfBounds(ValueError):
    """Raised when a requested period range falls outside a series span."""


class SeriesMissing(KeyError):
    """Raised when a headline series is absent from the store."""


class PeriodMissing(KeyError):
    """Raised when a requested period is absent from a series."""


@dataclass(frozen=True, order=True)
class Period:
    """One calendar month. Ordering is (year, month); the successor of
    December is January of the next year."""

    year: int
    month: int

    def __post_init__(self) -> None:
        if not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")

    @classmethod
    def parse(cls, text: str) -> "Period":
        year_s, _, month_s = text.partition("-")
        return cls(int(year_s), int(month_s))

    @classmethod
    def from_index(cls, index: int) -> "Period":
        return cls(index // 12, index % 12 + 1)

    @property
    def index(self) -> int:
        """Months since year 0; adjacent months differ by exactly 1."""
        return self.year * 12 + self.month - 1

    def next(self) -> "Period":
        return Period.from_index(self.index + 1)

    def minus(self, months: int) -> "Period":
        return Period.from_index(self.index - months)

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


class SeriesKind(str, Enum):
    RAW = "raw"
    PERCENT_CHANGE = "pct"


@dataclass
class TimeSeries:
    """Ordered monthly observations for one series. Values are optional:
    a null marks a month with no usable figure."""

    series_id: str
    kind: SeriesKind
    observations: list[tuple[Period, Optional[float]]] = field(default_factory=list)

    def __post_init__(self) -> None:
        periods = [p for p, _ in self.observations]
        for a, b in zip(periods, periods[1:]):
            if not a < b:
                raise ValueError(f"{self.series_id}: periods not strictly increasing at {b}")

    @property
    def first(self) -> Optional[Period]:
        return self.observations[0][0] if self.observations else None

    @property
    def last(self) -> Optional[Period]:
        return self.observations[-1][0] if self.observations else None

    def value_at(self, period: Period) -> Optional[float]:
        """Value at a period, None when the period is absent or null."""
        return dict(self.observations).get(period)

    def has_period(self, period: Period) -> bool:
        return any(p == period for p, _ in self.observations)

    def __len__(self) -> int:
        return len(self.observations)


@dataclass(frozen=True)
class Headline:
    """The report's two marquee numbers at one period, with month-over-month
    deltas (null-propagating)."""

    period: Period
    unemployment_rate: Optional[float]
    rate_delta: Optional[float]
    nonfarm_level: Optional[float]
    nonfarm_delta: Optional[float]


def normalize_raw(
    series_id: str,
    raws: list["RawObservation"],
    diagnostics: Optional[list[str]] = None,
) -> TimeSeries:
    """Convert raw API observations into a typed monthly series.

    Annual-average ("M13") rows are excluded, values convert text -> float,
    and periods sort ascending. Unparseable values become nulls at their
    period (never silently dropped); duplicate periods resolve last-wins.
    Diagnostics for every such event go to the optional collector.
    """
    notes = diagnostics if diagnostics is not None else []
    values: dict[Period, Optional[float]] = {}
    for raw in raws:
        if raw.period == "M13":
            notes.append(f"{series_id}: excluded annual average at {raw.year}")
            continue
        period = Period(raw.year, int(raw.period[1:]))
        try:
            value: Optional[float] = float(raw.value_text.strip())
        except ValueError:
            value = None
            notes.append(f"{series_id}: unparseable value {raw.value_text!r} at {period}")
        if period in values:
            notes.append(f"{series_id}: duplicate period {period}, keeping later value")
        values[period] = value
    observations = sorted(values.items())
    return TimeSeries(series_id=series_id, kind=SeriesKind.RAW, observations=observations)


def fill_gaps(series: TimeSeries) -> TimeSeries:
    """Force month-by-month contiguity from first to last period, inserting
    explicit nulls for missing months. Idempotent; existing values are
    never altered."""
    if len(series) < 2:
        return series
    by_period = dict(series.observations)
    observations: list[tuple[Period, Optional[float]]] = []
    period = series.first
    while period <= series.last:
        observations.append((period, by_period.get(period)))
        period = period.next()
    return TimeSeries(series_id=series.series_id, kind=series.kind, observations=observations)


def interpolate_gaps(series: TimeSeries) -> TimeSeries:
    """Linear interpolation across interior null runs. Off by default
    everywhere; offered for callers who prefer estimates over nulls."""
    filled = fill_gaps(series)
    obs = list(filled.observations)
    known = [i for i, (_, v) in enumerate(obs) if v is not None]
    for left, right in zip(known, known[1:]):
        if right - left <= 1:
            continue
        lo, hi = obs[left][1], obs[right][1]
        step = (hi - lo) / (right - left)
        for offset in range(1, right - left):
            obs[left + offset] = (obs[left + offset][0], lo + step * offset)
    return TimeSeries(series_id=series.series_id, kind=series.kind, observations=obs)


def percent_change(series: TimeSeries, lag: int = 1) -> TimeSeries:
    """Derive the percent rate of change: 100 * (v_t - v_{t-lag}) / v_{t-lag}.

    Null whenever either endpoint is null or the base is zero; the first
    ``lag`` periods are null by construction.
    """
    if series.kind != SeriesKind.RAW:
        raise AlreadyDerived(f"{series.series_id}: input is already {series.kind.value}")
    if lag < 1:
        raise ValueError("lag must be >= 1")
    by_period = dict(series.observations)
    observations: list[tuple[Period, Optional[float]]] = []
    for period, value in series.observations:
        base = by_period.get(period.minus(lag))
        if value is None or base is None or base == 0:
            observations.append((period, None))
        else:
            observations.append((period, 100.0 * (value - base) / base))
    return TimeSeries(
        series_id=series.series_id,
        kind=SeriesKind.PERCENT_CHANGE,
        observations=observations,
    )


def delta_over_range(
    series: TimeSeries, start: Period, end: Period
) -> tuple[Optional[float], Optional[float]]:
    """Absolute and percent change between two periods of a series.

    Both components are null when either endpoint value is null or the start
    value is zero.
    """
    if start > end:
        raise RangeOutOfBounds(f"start {start} after end {end}")
    if series.first is None or start < series.first or end > series.last:
        raise RangeOutOfBounds(f"{start}..{end} outside series span")
    v_start = series.value_at(start)
    v_end = series.value_at(end)
    if v_start is None or v_end is None or v_start == 0:
        return (None, None)
    absolute = v_end - v_start
    return (absolute, 100.0 * absolute / v_start)


@dataclass(frozen=True)
class HeadlineConfig:
    """Which two series feed the headline: the seasonally adjusted national
    unemployment rate, and seasonally adjusted total-nonfarm employment."""

    rate_series_id: str = "LNS14000000"
    nonfarm_series_id: str = "CES0000000001"


def compute_headline(
    store: "Store",
    period: Period,
    config: HeadlineConfig = HeadlineConfig(),
) -> Headline:
    """Read the two headline series at ``period`` and the prior month and
    assemble the at-a-glance numbers."""
    from .store import UnknownSeries

    def read(series_id: str) -> TimeSeries:
        try:
            return store.get_observations(series_id, SeriesKind.RAW)
        except UnknownSeries:
            raise SeriesMissing(series_id) from None

    rate = read(config.rate_series_id)
    nonfarm = read(config.nonfarm_series_id)
    if not rate.has_period(period) and not nonfarm.has_period(period):
        raise PeriodMissing(str(period))

    prior = period.minus(1)

    def delta(series: TimeSeries) -> Optional[float]:
        now, before = series.value_at(period), series.value_at(prior)
        if now is None or before is None:
            return None
        return now - before

    return Headline(
        period=period,
        unemployment_rate=rate.value_at(period),
        rate_delta=delta(rate),
        nonfarm_level=nonfarm.value_at(period),
        nonfarm_delta=delta(nonfarm),
    )
