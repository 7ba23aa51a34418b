"""Domain vocabulary for labor-statistics series.

Surveys, measures, geographies, unit kinds, and the canonical per-series
metadata record. Everything here is an immutable value; instances are safe
to share across threads.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Optional


class UnknownState(KeyError):
    """Raised when a state name has no entry in the FIPS table."""


class Survey(str, Enum):
    """Source survey for a series. National CES and its state/metro variant
    are distinguished as CES vs CESSM."""

    CPS = "CPS"
    CES = "CES"
    CESSM = "CESSM"
    LAUS = "LAUS"


# The four named employment dimensions. Anything else is preserved verbatim
# as an "other" measure so no series is ever dropped from the catalog.
KNOWN_MEASURES = (
    "employment",
    "unemployment",
    "unemployment rate",
    "labor force",
)


@dataclass(frozen=True)
class Measure:
    """An employment dimension. ``name`` is the canonical lowercase string
    for the four known measures, or the original (trimmed) text otherwise."""

    name: str

    @property
    def known(self) -> bool:
        return self.name in KNOWN_MEASURES

    @classmethod
    def parse(cls, text: str) -> "Measure":
        """Case-insensitive, whitespace-trimmed parse. Unknown measure text
        is kept as-is rather than rejected."""
        cleaned = text.strip()
        folded = cleaned.lower()
        if folded in KNOWN_MEASURES:
            return cls(folded)
        return cls(cleaned)

    def format(self) -> str:
        return self.name


EMPLOYMENT = Measure("employment")
UNEMPLOYMENT = Measure("unemployment")
UNEMPLOYMENT_RATE = Measure("unemployment rate")
LABOR_FORCE = Measure("labor force")


class UnitKind(str, Enum):
    """Whether a series carries dimensional values (counts/levels, in
    thousands of persons or jobs) or a rate (percent)."""

    DIMENSIONAL = "dimensional"
    RATE = "rate"


@dataclass(frozen=True)
class GeoArea:
    """A state-level geography: 2-digit zero-padded FIPS code, canonical
    name, and U.S. Census economic division."""

    fips: str
    name: str
    division: str


def _load_fips_table() -> dict[str, GeoArea]:
    table: dict[str, GeoArea] = {}
    source = resources.files("elmr.data").joinpath("state_fips.csv")
    with source.open("r", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            area = GeoArea(fips=row["fips"], name=row["name"], division=row["division"])
            table[area.name.lower()] = area
    return table


# 50 states + DC, keyed by lowercase name.
_FIPS_BY_NAME: dict[str, GeoArea] = _load_fips_table()

STATE_AREAS: tuple[GeoArea, ...] = tuple(
    sorted(_FIPS_BY_NAME.values(), key=lambda a: a.fips)
)
STATE_FIPS_CODES: tuple[str, ...] = tuple(a.fips for a in STATE_AREAS)


def lookup_fips(state_name: str) -> GeoArea:
    """Resolve a state name (case-insensitive, surrounding whitespace
    ignored) to its GeoArea.

    Raises UnknownState when the name is not in the 51-entry table.
    """
    key = state_name.strip().lower()
    try:
        return _FIPS_BY_NAME[key]
    except KeyError:
        raise UnknownState(state_name) from None


def is_state_name(text: str) -> bool:
    return text.strip().lower() in _FIPS_BY_NAME


def classify_units(measure: Measure, title: str) -> UnitKind:
    """Rate iff the measure is the unemployment rate or the title mentions
    a rate or percentage; dimensional otherwise."""
    if measure == UNEMPLOYMENT_RATE:
        return UnitKind.RATE
    folded = title.lower()
    if "rate" in folded or "percent" in folded:
        return UnitKind.RATE
    return UnitKind.DIMENSIONAL


@dataclass(frozen=True)
class SeriesMeta:
    """One catalog entry.

    Geographic surveys (CESSM, LAUS) must carry a GeoArea; national surveys
    (CPS, CES) must not.
    """

    series_id: str
    title: str
    survey: Survey
    measure: Measure
    modifier: Optional[str]
    adjusted: bool
    geo: Optional[GeoArea]
    unit: UnitKind

    def __post_init__(self) -> None:
        if self.survey in (Survey.CESSM, Survey.LAUS):
            if self.geo is None:
                raise ValueError(
                    f"{self.series_id}: {self.survey.value} series requires a geography"
                )
        elif self.geo is not None:
            raise ValueError(
                f"{self.series_id}: {self.survey.value} series must not carry a geography"
            )


def group_key(meta: SeriesMeta) -> str:
    """Dropdown group heading for a series: its survey acronym. Consumers
    sort titles lexicographically within a group."""
    return meta.survey.value
