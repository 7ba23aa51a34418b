"""REST surface powering the dashboards: catalog, series windows, headline
figures, geographic cross-sections, the hierarchy tree, exports, and admin
status.

All handlers are read-only snapshots over the store except the optional
ingest trigger. Errors are structured JSON {error, detail} mapped to
400/404/409/500; unknown query parameters are ignored with a Warning
header. Repeated identical GETs between ingests return byte-identical
bodies.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .catalog import STATE_FIPS_CODES, SeriesMeta, Survey
from .ingestion import BatchLimits, RetryPolicy, ingest_all
from .store import IngestInProgress, StorageFailure, Store, UnknownSeries
from .wrangling import (
    HeadlineConfig,
    Period,
    PeriodMissing,
    SeriesKind,
    SeriesMissing,
    compute_headline,
)


class BadParameter(ValueError):
    """Raised when a query parameter fails to parse."""


class UnknownDataset(KeyError):
    """Raised when a geo dataset key matches no per-state series family."""


class UnknownPeriod(KeyError):
    """Raised when a period falls outside every member series."""


class EmptySelection(ValueError):
    """Raised when an export names no series."""


class IngestNotConfigured(ValueError):
    """Raised when the ingest trigger is called without ingest settings."""


@dataclass(frozen=True)
class GeoSlice:
    """One (dataset, period) cross-section keyed by state FIPS code. All 51
    state-level codes are always present; states without data carry None."""

    dataset: str
    period: Period
    adjusted: bool
    delta: bool
    values: dict[str, Optional[float]]


@dataclass(frozen=True)
class IngestSettings:
    """Configuration for the optional admin ingest trigger."""

    endpoint_url: str
    seed_ids: tuple[str, ...]
    start_year: int
    end_year: int
    api_key: Optional[str] = None
    limits: Optional[BatchLimits] = None
    retry_policy: Optional[RetryPolicy] = None


# -- core builders (library surface, used by handlers and tests) ------------


def dataset_key(meta: SeriesMeta) -> str:
    """Geo dataset key: '<measure>|<modifier or ->'."""
    return f"{meta.measure.format()}|{meta.modifier or '-'}"


def build_geo_slice(
    store: Store, dataset: str, period: Period, adjusted: bool, delta: bool
) -> GeoSlice:
    """Per-state values for one dataset at one period. delta=true reads the
    materialized percent-change series instead of raw levels."""
    members = [
        meta
        for meta in store.list_catalog()
        if meta.geo is not None
        and dataset_key(meta) == dataset
        and meta.adjusted == adjusted
    ]
    if not members:
        raise UnknownDataset(
            f"no per-state series for dataset {dataset!r} with adjusted={adjusted}"
        )
    kind = SeriesKind.PERCENT_CHANGE if delta else SeriesKind.RAW
    values: dict[str, Optional[float]] = {fips: None for fips in STATE_FIPS_CODES}
    in_any_span = False
    for meta in members:
        series = store.get_observations(meta.series_id, kind)
        if len(series) and series.first <= period <= series.last:
            in_any_span = True
        values[meta.geo.fips] = series.value_at(period)
    if not in_any_span:
        raise UnknownPeriod(f"{period} is outside every member of {dataset!r}")
    return GeoSlice(
        dataset=dataset, period=period, adjusted=adjusted, delta=delta, values=values
    )


def build_tree(store: Store) -> dict:
    """Catalog hierarchy: survey -> measure -> modifier -> leaf series.
    Leaves carry series_id and the rate/dimensional color class; an inner
    node is 'rate' only when every leaf under it is."""

    def leaf(meta: SeriesMeta) -> dict:
        return {
            "label": meta.title,
            "color_class": meta.unit.value,
            "series_id": meta.series_id,
            "children": [],
        }

    def inner(label: str, children: list[dict]) -> dict:
        color = "rate" if all(c["color_class"] == "rate" for c in children) else "dimensional"
        return {"label": label, "color_class": color, "children": children}

    metas = store.list_catalog()
    surveys: dict[str, dict[str, dict[str, list[SeriesMeta]]]] = {}
    for meta in metas:
        by_measure = surveys.setdefault(meta.survey.value, {})
        by_modifier = by_measure.setdefault(meta.measure.format(), {})
        by_modifier.setdefault(meta.modifier or "", []).append(meta)

    survey_nodes = []
    for survey in sorted(surveys):
        measure_nodes = []
        for measure in sorted(surveys[survey]):
            children: list[dict] = []
            for modifier in sorted(surveys[survey][measure]):
                leaves = [leaf(m) for m in sorted(
                    surveys[survey][measure][modifier], key=lambda m: m.title)]
                if modifier:
                    children.append(inner(modifier, leaves))
                else:
                    children.extend(leaves)
            measure_nodes.append(inner(measure, children))
        survey_nodes.append(inner(survey, measure_nodes))
    if not survey_nodes:
        return {"label": "BLS", "color_class": "dimensional", "children": []}
    return inner("BLS", survey_nodes)


def _format_value(value: Optional[float]) -> str:
    return "" if value is None else repr(value)


def export_series(
    store: Store,
    ids: list[str],
    format: str,
    start_year: Optional[int] = None,
    end_year: Optional[int] = None,
) -> tuple[bytes, str]:
    """Render selected series as a (body, media_type) pair. CSV is one row
    per month of the union span with empty cells for missing values; JSON
    keeps each series' own span with nulls preserved."""
    if not ids:
        raise EmptySelection("no series selected for export")
    unknown = [sid for sid in ids if not store.has_series(sid)]
    if unknown:
        raise UnknownSeries(", ".join(unknown))
    if format not in ("csv", "json"):
        raise BadParameter(f"format must be csv or json, not {format!r}")

    windows = {
        sid: store.get_observations(sid, SeriesKind.RAW, start_year, end_year)
        for sid in ids
    }
    if format == "json":
        body = {
            "series": [
                {
                    "id": sid,
                    "title": store.get_meta(sid).title,
                    "observations": [
                        {"period": str(p), "value": v}
                        for p, v in windows[sid].observations
                    ],
                }
                for sid in ids
            ]
        }
        return json.dumps(body, indent=1).encode(), "application/json"

    nonempty = [s for s in windows.values() if len(s)]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["period"] + list(ids))
    if nonempty:
        first = min(s.first for s in nonempty)
        last = max(s.last for s in nonempty)
        period = first
        while period <= last:
            row = [str(period)]
            row += [_format_value(windows[sid].value_at(period)) for sid in ids]
            writer.writerow(row)
            period = period.next()
    return buffer.getvalue().encode(), "text/csv"


def parse_csv_export(text: str) -> dict[str, list[tuple[Period, Optional[float]]]]:
    """Inverse of the CSV export: series id -> (period, value) rows. Empty
    cells come back as None."""
    rows = list(csv.reader(io.StringIO(text)))
    header = rows[0]
    if header[0] != "period":
        raise ValueError("not an export: first column must be 'period'")
    out: dict[str, list[tuple[Period, Optional[float]]]] = {
        sid: [] for sid in header[1:]
    }
    for row in rows[1:]:
        period = Period.parse(row[0])
        for sid, cell in zip(header[1:], row[1:]):
            out[sid].append((period, float(cell) if cell else None))
    return out


def parse_json_export(body: bytes) -> dict[str, list[tuple[Period, Optional[float]]]]:
    """Inverse of the JSON export: series id -> (period, value) rows."""
    payload = json.loads(body)
    return {
        entry["id"]: [
            (Period.parse(o["period"]), o["value"]) for o in entry["observations"]
        ]
        for entry in payload["series"]
    }


def status_payload(store: Store, limit: int = 20) -> dict:
    """StoreStatus plus the most recent log entries, newest first."""
    status = store.status()
    return {
        "status": {
            "color": status.color.value,
            "last_ingest": (
                status.last_ingest.isoformat() if status.last_ingest else None
            ),
            "series_count": status.series_count,
            "record_count": status.record_count,
            "app_version": status.app_version,
        },
        "log": [
            {
                "started_at": entry.started_at.isoformat(),
                "duration": entry.duration,
                "series_count": entry.series_count,
                "record_count": entry.record_count,
                "outcome": entry.outcome.value,
                "detail": entry.detail,
            }
            for entry in store.recent_log(limit)
        ],
    }


# -- HTTP wiring -------------------------------------------------------------


def _error_body(exc: Exception, fallback: str = "") -> dict:
    detail = str(exc.args[0]) if exc.args else fallback
    return {"error": type(exc).__name__, "detail": detail}


def _parse_bool(raw: str, name: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise BadParameter(f"{name} must be a boolean, not {raw!r}")


def _parse_period(raw: str, name: str) -> Period:
    try:
        return Period.parse(raw)
    except ValueError as exc:
        raise BadParameter(f"{name}: {exc}") from exc


def _warn_unknown_params(request: Request, response: Response, known: set[str]) -> None:
    unknown = sorted(set(request.query_params) - known)
    if unknown:
        response.headers["Warning"] = (
            '199 - "unknown query parameters ignored: ' + ", ".join(unknown) + '"'
        )


_FALLBACK_INDEX = """<!doctype html>
<title>labor statistics service</title>
<h1>labor statistics service</h1>
<p>The dashboard bundle is not installed. The JSON API is live:</p>
<ul>
<li><a href="/api/catalog">/api/catalog</a></li>
<li>/api/series/{id}?kind=&amp;start=&amp;end=</li>
<li>/api/headline?period=</li>
<li>/api/geo?dataset=&amp;period=&amp;adjusted=&amp;delta=</li>
<li><a href="/api/tree">/api/tree</a></li>
<li>/api/export?ids=&amp;format=&amp;start=&amp;end=</li>
<li><a href="/api/admin/status">/api/admin/status</a></li>
</ul>
"""


def create_app(
    store: Store,
    ingest_settings: Optional[IngestSettings] = None,
    static_dir: Optional[str | Path] = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    app = FastAPI(title="labor statistics service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def handler(status: int):
        def handle(request: Request, exc: Exception):
            return JSONResponse(_error_body(exc), status_code=status)

        return handle

    for exc_type in (BadParameter, EmptySelection, IngestNotConfigured):
        app.add_exception_handler(exc_type, handler(400))
    for exc_type in (UnknownSeries, UnknownDataset, UnknownPeriod,
                     SeriesMissing, PeriodMissing):
        app.add_exception_handler(exc_type, handler(404))
    app.add_exception_handler(IngestInProgress, handler(409))
    app.add_exception_handler(StorageFailure, handler(500))

    @app.exception_handler(Exception)
    def internal_error(request: Request, exc: Exception):
        return JSONResponse(
            {"error": "InternalError", "detail": str(exc)}, status_code=500
        )

    @app.exception_handler(RequestValidationError)
    def bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(
            {"error": "BadParameter", "detail": str(exc.errors())}, status_code=400
        )

    @app.get("/api/catalog")
    def catalog(request: Request, response: Response, survey: Optional[str] = None):
        _warn_unknown_params(request, response, {"survey"})
        chosen: Optional[Survey] = None
        if survey is not None:
            try:
                chosen = Survey(survey.upper())
            except ValueError as exc:
                raise BadParameter(f"unknown survey {survey!r}") from exc
        return {
            "catalog": [
                {
                    "series_id": meta.series_id,
                    "title": meta.title,
                    "survey": meta.survey.value,
                    "measure": meta.measure.format(),
                    "modifier": meta.modifier,
                    "adjusted": meta.adjusted,
                    "fips": meta.geo.fips if meta.geo else None,
                    "geo_name": meta.geo.name if meta.geo else None,
                    "unit": meta.unit.value,
                    "dataset": dataset_key(meta) if meta.geo else None,
                }
                for meta in store.list_catalog(chosen)
            ]
        }

    @app.get("/api/series/{series_id}")
    def series(
        request: Request,
        response: Response,
        series_id: str,
        kind: str = "raw",
        start: Optional[int] = None,
        end: Optional[int] = None,
    ):
        _warn_unknown_params(request, response, {"kind", "start", "end"})
        try:
            chosen = SeriesKind(kind)
        except ValueError as exc:
            raise BadParameter(f"kind must be raw or pct, not {kind!r}") from exc
        window = store.get_observations(series_id, chosen, start, end)
        meta = store.get_meta(series_id)
        return {
            "series_id": series_id,
            "title": meta.title,
            "kind": chosen.value,
            "unit": meta.unit.value,
            "observations": [
                {"period": str(p), "value": v} for p, v in window.observations
            ],
        }

    @app.get("/api/headline")
    def headline(request: Request, response: Response, period: Optional[str] = None):
        _warn_unknown_params(request, response, {"period"})
        config = HeadlineConfig()
        if period is not None:
            chosen = _parse_period(period, "period")
        else:
            rate_id = config.rate_series_id
            rate = store.get_observations(rate_id) if store.has_series(rate_id) else None
            if rate is None or not len(rate):
                raise PeriodMissing("no period given and no headline series stored")
            chosen = rate.last
        head = compute_headline(store, chosen, config)
        return {
            "period": str(head.period),
            "unemployment_rate": head.unemployment_rate,
            "rate_delta": head.rate_delta,
            "nonfarm_level": head.nonfarm_level,
            "nonfarm_delta": head.nonfarm_delta,
        }

    @app.get("/api/geo")
    def geo(
        request: Request,
        response: Response,
        dataset: str,
        period: str,
        adjusted: str = "true",
        delta: str = "false",
    ):
        _warn_unknown_params(
            request, response, {"dataset", "period", "adjusted", "delta"}
        )
        slice_ = build_geo_slice(
            store,
            dataset,
            _parse_period(period, "period"),
            _parse_bool(adjusted, "adjusted"),
            _parse_bool(delta, "delta"),
        )
        return {
            "dataset": slice_.dataset,
            "period": str(slice_.period),
            "adjusted": slice_.adjusted,
            "delta": slice_.delta,
            "values": slice_.values,
        }

    @app.get("/api/tree")
    def tree(request: Request, response: Response):
        _warn_unknown_params(request, response, set())
        return build_tree(store)

    @app.get("/api/export")
    def export(
        request: Request,
        response: Response,
        ids: str = "",
        format: str = "csv",
        start: Optional[int] = None,
        end: Optional[int] = None,
    ):
        _warn_unknown_params(request, response, {"ids", "format", "start", "end"})
        id_list = [x for x in (part.strip() for part in ids.split(",")) if x]
        body, media_type = export_series(store, id_list, format, start, end)
        headers = dict(response.headers)
        return Response(content=body, media_type=media_type, headers=headers)

    @app.get("/api/admin/status")
    def admin_status(request: Request, response: Response):
        _warn_unknown_params(request, response, set())
        return status_payload(store)

    @app.post("/api/admin/ingest")
    def admin_ingest(request: Request, response: Response):
        if ingest_settings is None:
            raise IngestNotConfigured(
                "this server was started without ingest settings"
            )
        entry = ingest_all(
            list(ingest_settings.seed_ids),
            ingest_settings.start_year,
            ingest_settings.end_year,
            store,
            endpoint_url=ingest_settings.endpoint_url,
            api_key=ingest_settings.api_key,
            limits=ingest_settings.limits,
            retry_policy=ingest_settings.retry_policy,
        )
        return {
            "started_at": entry.started_at.isoformat(),
            "duration": entry.duration,
            "series_count": entry.series_count,
            "record_count": entry.record_count,
            "outcome": entry.outcome.value,
            "detail": entry.detail,
        }

    if static_dir and Path(static_dir, "index.html").is_file():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return _FALLBACK_INDEX

    return app
