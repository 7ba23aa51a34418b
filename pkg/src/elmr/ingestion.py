"""Batched, year-windowed ingestion from the labor-statistics API wire
format, against either the live endpoint or a local fixture server.

The wire protocol is HTTP POST of a JSON body {seriesid, startyear,
endyear, registrationkey?} answered by {status, message, Results.series}.
Requests are chunked to honor per-request limits (registered keys get
larger windows), fetched with bounded parallelism, and written through a
single serialized writer. Every run appends exactly one log entry.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Optional

import requests

from .catalog import SeriesMeta, classify_units, lookup_fips
from .title_parser import parse_series_id, parse_title
from .wrangling import fill_gaps, normalize_raw

if TYPE_CHECKING:
    from .store import Store

DEFAULT_ENDPOINT = "https://api.bls.gov/publicAPI/v2/timeseries/data/"

_PERIOD_RE = re.compile(r"M(0[1-9]|1[0-3])$")


class FileUnreadable(OSError):
    """Raised when the seed list cannot be opened or read."""


class EmptySeedList(ValueError):
    """Raised when the seed list holds no series identifiers."""


class InvalidRange(ValueError):
    """Raised when start_year > end_year."""


class Transport(RuntimeError):
    """Raised when the endpoint stays unreachable after retries."""


class ApiRefusal(RuntimeError):
    """Raised when the API answers with a failure status in the body."""


class MalformedPayload(ValueError):
    """Raised when a response body does not follow the wire format."""


@dataclass(frozen=True)
class BatchLimits:
    max_series_per_request: int
    max_years_per_request: int

    def __post_init__(self):
        if self.max_series_per_request < 1 or self.max_years_per_request < 1:
            raise ValueError("batch limits must be at least 1")


def default_limits(api_key: Optional[str]) -> BatchLimits:
    """Registered keys get 50 series and 20 years per request; anonymous
    clients get 25 and 10."""
    if api_key:
        return BatchLimits(max_series_per_request=50, max_years_per_request=20)
    return BatchLimits(max_series_per_request=25, max_years_per_request=10)


@dataclass(frozen=True)
class RetryPolicy:
    """Exponential backoff: attempts tries total, first wait initial_backoff
    seconds, doubling after each failure."""

    attempts: int = 3
    initial_backoff: float = 1.0

    def delays(self) -> Iterable[float]:
        wait = self.initial_backoff
        for _ in range(self.attempts - 1):
            yield wait
            wait *= 2


@dataclass(frozen=True)
class IngestRequest:
    series_ids: tuple[str, ...]
    start_year: int
    end_year: int
    api_key: Optional[str] = None

    def __post_init__(self):
        if not self.series_ids:
            raise ValueError("a request must name at least one series")
        if self.start_year > self.end_year:
            raise InvalidRange(f"{self.start_year} > {self.end_year}")


@dataclass(frozen=True)
class RawObservation:
    year: int
    period: str
    value_text: str
    footnotes: tuple[str, ...] = ()

    def __post_init__(self):
        if not _PERIOD_RE.fullmatch(self.period):
            raise ValueError(f"period code {self.period!r} not in M01..M13")


class IngestOutcome(str, Enum):
    SUCCESS = "Success"
    PARTIAL = "Partial"
    FAILED = "Failed"


@dataclass(frozen=True)
class IngestLogEntry:
    started_at: datetime
    duration: float
    series_count: int
    record_count: int
    outcome: IngestOutcome
    detail: str


def load_seed_list(path: str | Path) -> list[str]:
    """Series IDs from a text file, de-duplicated in file order. Blank
    lines and # comments are ignored."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileUnreadable(f"cannot read seed list {path}: {exc}") from exc
    seen: dict[str, None] = {}
    for line in text.splitlines():
        entry = line.split("#", 1)[0].strip()
        if entry:
            seen.setdefault(entry)
    if not seen:
        raise EmptySeedList(f"seed list {path} names no series")
    return list(seen)


def chunk_requests(
    series_ids: list[str],
    start_year: int,
    end_year: int,
    limits: BatchLimits,
    api_key: Optional[str] = None,
) -> list[IngestRequest]:
    """Partition ids x years into requests honoring both limits. Every
    (id, year) pair lands in exactly one request."""
    if start_year > end_year:
        raise InvalidRange(f"{start_year} > {end_year}")
    requests_out = []
    for i in range(0, len(series_ids), limits.max_series_per_request):
        ids = tuple(series_ids[i : i + limits.max_series_per_request])
        year = start_year
        while year <= end_year:
            window_end = min(year + limits.max_years_per_request - 1, end_year)
            requests_out.append(
                IngestRequest(
                    series_ids=ids,
                    start_year=year,
                    end_year=window_end,
                    api_key=api_key,
                )
            )
            year = window_end + 1
    return requests_out


@dataclass
class FetchResult:
    """One chunk's parsed response: observations plus any catalog titles
    the endpoint included."""

    observations: dict[str, list[RawObservation]]
    titles: dict[str, str] = field(default_factory=dict)


def _post_with_retries(
    endpoint_url: str, body: dict, policy: RetryPolicy
) -> requests.Response:
    delays = iter(policy.delays())
    while True:
        try:
            response = requests.post(endpoint_url, json=body, timeout=30)
        except requests.RequestException as exc:
            error: Exception = exc
        else:
            if response.status_code < 500:
                return response
            error = Transport(f"server error {response.status_code}")
        wait = next(delays, None)
        if wait is None:
            raise Transport(f"{endpoint_url} unreachable: {error}") from (
                error if isinstance(error, requests.RequestException) else None
            )
        time.sleep(wait)


def _parse_payload(raw_body: bytes, diagnostics: Optional[list[str]]) -> FetchResult:
    try:
        payload = json.loads(raw_body)
    except ValueError as exc:
        raise MalformedPayload(f"response is not JSON: {exc}") from exc
    if not isinstance(payload, dict) or "status" not in payload:
        raise MalformedPayload("response lacks a status field")
    if payload["status"] != "REQUEST_SUCCEEDED":
        messages = "; ".join(str(m) for m in payload.get("message", []))
        raise ApiRefusal(f"{payload['status']}: {messages}")
    try:
        series_list = payload["Results"]["series"]
    except (KeyError, TypeError) as exc:
        raise MalformedPayload("response lacks Results.series") from exc

    result = FetchResult(observations={})
    for entry in series_list:
        try:
            sid = entry["seriesID"]
            rows = entry["data"]
        except (KeyError, TypeError) as exc:
            raise MalformedPayload(f"series entry malformed: {exc}") from exc
        title = entry.get("catalog", {}).get("series_title")
        if title:
            result.titles[sid] = title
        raws = []
        for row in rows:
            try:
                raws.append(
                    RawObservation(
                        year=int(row["year"]),
                        period=row["period"],
                        value_text=str(row["value"]),
                        footnotes=tuple(
                            f.get("text", "") for f in row.get("footnotes", []) if f
                        ),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise MalformedPayload(f"data row malformed for {sid}: {exc}") from exc
        result.observations[sid] = raws
    return result


def fetch_chunk(
    endpoint_url: str,
    request: IngestRequest,
    retry_policy: Optional[RetryPolicy] = None,
    diagnostics: Optional[list[str]] = None,
) -> FetchResult:
    """Fetch one chunk and keep everything the response carried, including
    catalog titles when the endpoint supplies them."""
    policy = retry_policy or RetryPolicy()
    body = {
        "seriesid": list(request.series_ids),
        "startyear": str(request.start_year),
        "endyear": str(request.end_year),
        "catalog": True,
    }
    if request.api_key:
        body["registrationkey"] = request.api_key
    response = _post_with_retries(endpoint_url, body, policy)
    if response.status_code >= 400:
        raise Transport(f"HTTP {response.status_code} from {endpoint_url}")
    result = _parse_payload(response.content, diagnostics)
    for sid in request.series_ids:
        if sid not in result.observations:
            result.observations[sid] = []
            if diagnostics is not None:
                diagnostics.append(f"{sid}: requested but absent from response")
    return result


def fetch_batch(
    endpoint_url: str,
    request: IngestRequest,
    retry_policy: Optional[RetryPolicy] = None,
    diagnostics: Optional[list[str]] = None,
) -> dict[str, list[RawObservation]]:
    """Observations per requested series. Series absent from the response
    map to empty lists, with a diagnostic."""
    return fetch_chunk(endpoint_url, request, retry_policy, diagnostics).observations


def _build_meta(series_id: str, title: str) -> SeriesMeta:
    survey = parse_series_id(series_id)
    parsed = parse_title(title)
    geo = lookup_fips(parsed.geo_name) if parsed.geo_name else None
    return SeriesMeta(
        series_id=series_id,
        title=title,
        survey=survey,
        measure=parsed.measure,
        modifier=parsed.modifier,
        adjusted=parsed.adjusted,
        geo=geo,
        unit=classify_units(parsed.measure, title),
    )


def ingest_all(
    seed_ids: list[str],
    start_year: int,
    end_year: int,
    store: "Store",
    endpoint_url: str = DEFAULT_ENDPOINT,
    api_key: Optional[str] = None,
    limits: Optional[BatchLimits] = None,
    retry_policy: Optional[RetryPolicy] = None,
    parallelism: int = 4,
) -> IngestLogEntry:
    """Chunk, fetch (bounded parallelism), normalize, and upsert every
    seeded series; append exactly one log entry describing the run.

    Re-running against identical source data leaves store contents
    identical. Per-series failures turn the outcome Partial; a run where
    nothing lands is Failed.
    """
    started_at = datetime.now(timezone.utc)
    t0 = time.monotonic()
    limits = limits or default_limits(api_key)
    diagnostics: list[str] = []
    failures: dict[str, str] = {}
    ingested = 0
    records = 0

    with store.ingest_lock():
        chunks = chunk_requests(seed_ids, start_year, end_year, limits, api_key)
        collected: dict[str, list[RawObservation]] = {sid: [] for sid in seed_ids}
        titles: dict[str, str] = {}

        def fetch_one(chunk: IngestRequest) -> tuple[IngestRequest, FetchResult | Exception]:
            try:
                return chunk, fetch_chunk(endpoint_url, chunk, retry_policy, diagnostics)
            except (Transport, ApiRefusal, MalformedPayload) as exc:
                return chunk, exc

        try:
            with ThreadPoolExecutor(max_workers=parallelism) as pool:
                for chunk, outcome in pool.map(fetch_one, chunks):
                    if isinstance(outcome, Exception):
                        for sid in chunk.series_ids:
                            failures[sid] = str(outcome)
                        continue
                    for sid, raws in outcome.observations.items():
                        collected.setdefault(sid, []).extend(raws)
                    titles.update(outcome.titles)

            for sid in seed_ids:
                if sid in failures:
                    continue
                raws = collected.get(sid, [])
                if not raws:
                    failures[sid] = "no observations in response"
                    continue
                try:
                    meta = _build_meta(sid, titles.get(sid, sid))
                    series = fill_gaps(normalize_raw(sid, raws, diagnostics))
                    store.upsert_series(meta, series)
                except (KeyError, ValueError) as exc:
                    failures[sid] = f"unusable metadata or payload: {exc}"
                    continue
                ingested += 1
                records += len(series)
        except BaseException:
            store.append_log(
                IngestLogEntry(
                    started_at=started_at,
                    duration=time.monotonic() - t0,
                    series_count=ingested,
                    record_count=records,
                    outcome=IngestOutcome.FAILED,
                    detail="aborted by unexpected error",
                )
            )
            raise

        if not failures:
            outcome_kind = IngestOutcome.SUCCESS
            detail = f"ingested all {ingested} series"
        elif ingested:
            outcome_kind = IngestOutcome.PARTIAL
            summary = "; ".join(f"{sid}: {why}" for sid, why in sorted(failures.items()))
            detail = f"failed {len(failures)} of {len(seed_ids)}: {summary}"
        else:
            outcome_kind = IngestOutcome.FAILED
            summary = "; ".join(f"{sid}: {why}" for sid, why in sorted(failures.items()))
            detail = f"nothing ingested: {summary}"

        entry = IngestLogEntry(
            started_at=started_at,
            duration=time.monotonic() - t0,
            series_count=ingested,
            record_count=records,
            outcome=outcome_kind,
            detail=detail,
        )
        store.append_log(entry)
    return entry
