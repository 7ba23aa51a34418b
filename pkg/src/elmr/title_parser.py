"""Recover structured metadata from free-text series titles.

Series titles follow the grammar

    [<State>, ][<Modifier>, ]<SeasonalClause> - <measure>

where the seasonal clause is "Seasonally adjusted" or "Not seasonally
adjusted" (case-insensitive). The leading comma-separated segment becomes
the geography when it names a state; remaining segments before the seasonal
clause join into the modifier; text after the final " - " is the measure.

Series identifiers classify into surveys by prefix ("LN" -> CPS, "CE" ->
CES, "SM" -> CESSM, "LA" -> LAUS); the mapping can be overridden from a
config file of ``prefix = survey`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from .catalog import GeoArea, Measure, Survey, is_state_name, lookup_fips


class EmptyTitle(ValueError):
    """Raised when asked to parse an empty or whitespace-only title."""


class UnknownSurveyPrefix(KeyError):
    """Raised when a series identifier matches no configured survey prefix."""


NO_SEASONAL_CLAUSE = "no seasonal clause"

_SEASONAL_CLAUSES = {
    "seasonally adjusted": True,
    "not seasonally adjusted": False,
}


@dataclass(frozen=True)
class ParsedTitle:
    """Structured fields recovered from one title.

    ``residual`` carries diagnostics (e.g. a missing seasonal clause) and is
    excluded from equality: two parses that agree on the semantic fields are
    the same parse.
    """

    geo_name: Optional[str]
    modifier: Optional[str]
    adjusted: bool
    measure: Measure
    residual: str = field(default="", compare=False)


def parse_title(title: str) -> ParsedTitle:
    """Parse one series title per the grammar above.

    Titles without a seasonal clause parse with adjusted=False and the whole
    pre-dash portion as modifier, flagged in ``residual``. The measure is
    never absent: unmatched trailing text becomes an unknown Measure.
    """
    if not title or not title.strip():
        raise EmptyTitle("title is empty")

    head, sep, tail = title.rpartition(" - ")
    if sep:
        measure = Measure.parse(tail)
        pre = head
    else:
        # No dash: the whole title is measure text.
        measure = Measure.parse(title)
        pre = ""

    segments = [s.strip() for s in pre.split(",") if s.strip()]

    residual = ""
    adjusted = False
    if segments and segments[-1].lower() in _SEASONAL_CLAUSES:
        adjusted = _SEASONAL_CLAUSES[segments[-1].lower()]
        segments = segments[:-1]
    else:
        residual = NO_SEASONAL_CLAUSE

    geo_name: Optional[str] = None
    if segments and is_state_name(segments[0]):
        # State matching applies to the first segment only; later segments
        # (and non-state leads like "Virginia Beach") stay in the modifier.
        geo_name = lookup_fips(segments[0]).name
        segments = segments[1:]

    modifier = ", ".join(segments) if segments else None

    return ParsedTitle(
        geo_name=geo_name,
        modifier=modifier,
        adjusted=adjusted,
        measure=measure,
        residual=residual,
    )


def canonical_title(
    parsed: ParsedTitle,
    geo_resolver: Callable[[str], GeoArea] = lookup_fips,
) -> str:
    """Re-emit the grammar form of a parse.

    ``parse_title(canonical_title(p))`` equals ``p`` on the semantic fields.
    The resolver canonicalizes the state name's spelling.
    """
    parts: list[str] = []
    if parsed.geo_name is not None:
        parts.append(geo_resolver(parsed.geo_name).name)
    if parsed.modifier is not None:
        parts.append(parsed.modifier)
    parts.append("Seasonally adjusted" if parsed.adjusted else "Not seasonally adjusted")
    return ", ".join(parts) + " - " + parsed.measure.format()


DEFAULT_PREFIX_MAP: dict[str, Survey] = {
    "LN": Survey.CPS,
    "CE": Survey.CES,
    "SM": Survey.CESSM,
    "LA": Survey.LAUS,
}


def load_prefix_map(path: str | Path) -> dict[str, Survey]:
    """Read a ``prefix = survey`` config file (# comments, blank lines
    ignored) into a prefix map."""
    mapping: dict[str, Survey] = {}
    for raw_line in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        prefix, _, survey_name = line.partition("=")
        mapping[prefix.strip()] = Survey(survey_name.strip().upper())
    return mapping


def parse_series_id(
    series_id: str,
    prefix_map: Optional[dict[str, Survey]] = None,
) -> Survey:
    """Classify a series identifier into its survey by prefix. Longer
    prefixes win over shorter ones when a custom map overlaps."""
    if not series_id:
        raise UnknownSurveyPrefix("empty series id")
    mapping = DEFAULT_PREFIX_MAP if prefix_map is None else prefix_map
    for prefix in sorted(mapping, key=len, reverse=True):
        if series_id.startswith(prefix):
            return mapping[prefix]
    raise UnknownSurveyPrefix(series_id)
