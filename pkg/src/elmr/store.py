"""Persistent home for the catalog, observations, derived series, and the
ingest log.

A single SQLite file keeps the repo self-contained at desk scale. Derived
percent-change series are materialized on every upsert of their raw parent,
so readers never compute them on demand. Readers and the single ingest
writer share one connection guarded by a lock; a series becomes visible
only with all its observations (one transaction per series).

Freshness model: GREEN within 30 days of the last ingest, YELLOW within
183 days, RED beyond that or when no ingest has ever run.
"""

from __future__ import annotations

import hashlib
import os
import sqlite3
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional

from . import __version__
from .catalog import GeoArea, Measure, SeriesMeta, Survey, UnitKind
from .ingestion import IngestLogEntry, IngestOutcome
from .wrangling import Period, SeriesKind, TimeSeries, percent_change

SCHEMA_VERSION = "1"

GREEN_WINDOW = timedelta(days=30)
YELLOW_WINDOW = timedelta(days=183)


class StorageFailure(RuntimeError):
    """Raised when the underlying database rejects an operation."""


class StoreVersionMismatch(RuntimeError):
    """Raised when opening a store written with a different schema version."""


class UnknownSeries(KeyError):
    """Raised when a series identifier is not in the catalog."""


class IngestInProgress(RuntimeError):
    """Raised when a second ingest attempts to start while one is running."""


class StatusColor(str, Enum):
    GREEN = "GREEN"
    YELLOW = "YELLOW"
    RED = "RED"


@dataclass(frozen=True)
class StoreStatus:
    color: StatusColor
    last_ingest: Optional[datetime]
    series_count: int
    record_count: int
    app_version: str


_SCHEMA = """
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS catalog (
    series_id TEXT PRIMARY KEY,
    title TEXT NOT NULL,
    survey TEXT NOT NULL,
    measure TEXT NOT NULL,
    modifier TEXT,
    adjusted INTEGER NOT NULL,
    fips TEXT,
    geo_name TEXT,
    division TEXT,
    unit TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS observations (
    series_id TEXT NOT NULL,
    kind TEXT NOT NULL,
    year INTEGER NOT NULL,
    month INTEGER NOT NULL,
    value REAL,
    PRIMARY KEY (series_id, kind, year, month)
);
CREATE TABLE IF NOT EXISTS ingest_log (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    started_at TEXT NOT NULL,
    duration REAL NOT NULL,
    series_count INTEGER NOT NULL,
    record_count INTEGER NOT NULL,
    outcome TEXT NOT NULL,
    detail TEXT NOT NULL
);
"""


class Store:
    """SQLite-backed store. Open with a file path, or ":memory:" for tests."""

    def __init__(self, path: str | Path = ":memory:"):
        self.path = str(path)
        self._lock = threading.RLock()
        self._ingest_guard = threading.Lock()
        try:
            self._conn = sqlite3.connect(self.path, check_same_thread=False)
            self._conn.executescript(_SCHEMA)
            self._init_meta()
        except sqlite3.Error as exc:
            raise StorageFailure(f"cannot open store at {self.path}: {exc}") from exc

    def _init_meta(self) -> None:
        row = self._conn.execute(
            "SELECT value FROM meta WHERE key = 'schema_version'"
        ).fetchone()
        if row is None:
            with self._conn:
                self._conn.execute(
                    "INSERT INTO meta (key, value) VALUES ('schema_version', ?)",
                    (SCHEMA_VERSION,),
                )
        elif row[0] != SCHEMA_VERSION:
            raise StoreVersionMismatch(
                f"store at {self.path} has schema version {row[0]}, "
                f"this build expects {SCHEMA_VERSION}"
            )

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    # -- write side ---------------------------------------------------------

    def upsert_series(self, meta: SeriesMeta, series: TimeSeries) -> None:
        """Insert-or-replace a series and its observations, keyed by
        (series_id, kind, period). Raw upserts re-derive the materialized
        percent-change series from the merged raw state."""
        if meta.series_id != series.series_id:
            raise ValueError(
                f"metadata is for {meta.series_id}, series is {series.series_id}"
            )
        with self._lock:
            try:
                with self._conn:
                    self._write_catalog_row(meta)
                    self._write_observations(series)
                    if series.kind == SeriesKind.RAW:
                        merged = self._read_series(series.series_id, SeriesKind.RAW)
                        self._write_observations(percent_change(merged))
            except sqlite3.Error as exc:
                raise StorageFailure(str(exc)) from exc

    def _write_catalog_row(self, meta: SeriesMeta) -> None:
        self._conn.execute(
            """
            INSERT OR REPLACE INTO catalog
                (series_id, title, survey, measure, modifier, adjusted,
                 fips, geo_name, division, unit)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
            """,
            (
                meta.series_id,
                meta.title,
                meta.survey.value,
                meta.measure.format(),
                meta.modifier,
                int(meta.adjusted),
                meta.geo.fips if meta.geo else None,
                meta.geo.name if meta.geo else None,
                meta.geo.division if meta.geo else None,
                meta.unit.value,
            ),
        )

    def _write_observations(self, series: TimeSeries) -> None:
        self._conn.executemany(
            """
            INSERT OR REPLACE INTO observations (series_id, kind, year, month, value)
            VALUES (?, ?, ?, ?, ?)
            """,
            (
                (series.series_id, series.kind.value, p.year, p.month, v)
                for p, v in series.observations
            ),
        )

    def append_log(self, entry: IngestLogEntry) -> None:
        with self._lock:
            try:
                with self._conn:
                    self._conn.execute(
                        """
                        INSERT INTO ingest_log
                            (started_at, duration, series_count, record_count,
                             outcome, detail)
                        VALUES (?, ?, ?, ?, ?, ?)
                        """,
                        (
                            entry.started_at.isoformat(),
                            entry.duration,
                            entry.series_count,
                            entry.record_count,
                            entry.outcome.value,
                            entry.detail,
                        ),
                    )
            except sqlite3.Error as exc:
                raise StorageFailure(str(exc)) from exc

    def ingest_lock(self) -> "_IngestLock":
        """Single-flight guard for ingest runs: an in-process mutex plus a
        lock file next to file-backed stores."""
        return _IngestLock(self)

    # -- read side ----------------------------------------------------------

    def _read_series(self, series_id: str, kind: SeriesKind) -> TimeSeries:
        rows = self._conn.execute(
            """
            SELECT year, month, value FROM observations
            WHERE series_id = ? AND kind = ?
            ORDER BY year, month
            """,
            (series_id, kind.value),
        ).fetchall()
        return TimeSeries(
            series_id=series_id,
            kind=kind,
            observations=[(Period(y, m), v) for y, m, v in rows],
        )

    def has_series(self, series_id: str) -> bool:
        with self._lock:
            row = self._conn.execute(
                "SELECT 1 FROM catalog WHERE series_id = ?", (series_id,)
            ).fetchone()
        return row is not None

    def get_observations(
        self,
        series_id: str,
        kind: SeriesKind = SeriesKind.RAW,
        start_year: Optional[int] = None,
        end_year: Optional[int] = None,
    ) -> TimeSeries:
        """Observations for one series, optionally windowed by inclusive
        year bounds."""
        with self._lock:
            if not self.has_series(series_id):
                raise UnknownSeries(series_id)
            series = self._read_series(series_id, kind)
        observations = [
            (p, v)
            for p, v in series.observations
            if (start_year is None or p.year >= start_year)
            and (end_year is None or p.year <= end_year)
        ]
        return TimeSeries(series_id=series_id, kind=kind, observations=observations)

    def get_meta(self, series_id: str) -> SeriesMeta:
        with self._lock:
            row = self._conn.execute(
                """
                SELECT series_id, title, survey, measure, modifier, adjusted,
                       fips, geo_name, division, unit
                FROM catalog WHERE series_id = ?
                """,
                (series_id,),
            ).fetchone()
        if row is None:
            raise UnknownSeries(series_id)
        return self._meta_from_row(row)

    @staticmethod
    def _meta_from_row(row: tuple) -> SeriesMeta:
        sid, title, survey, measure, modifier, adjusted, fips, geo_name, division, unit = row
        geo = GeoArea(fips=fips, name=geo_name, division=division) if fips else None
        return SeriesMeta(
            series_id=sid,
            title=title,
            survey=Survey(survey),
            measure=Measure.parse(measure),
            modifier=modifier,
            adjusted=bool(adjusted),
            geo=geo,
            unit=UnitKind(unit),
        )

    def list_catalog(self, survey: Optional[Survey] = None) -> list[SeriesMeta]:
        """All catalog entries in stable dropdown order: survey acronym
        ascending, titles lexicographic within each survey."""
        query = """
            SELECT series_id, title, survey, measure, modifier, adjusted,
                   fips, geo_name, division, unit
            FROM catalog
        """
        params: tuple = ()
        if survey is not None:
            query += " WHERE survey = ?"
            params = (survey.value,)
        query += " ORDER BY survey, title"
        with self._lock:
            rows = self._conn.execute(query, params).fetchall()
        return [self._meta_from_row(row) for row in rows]

    def series_count(self) -> int:
        with self._lock:
            return self._conn.execute("SELECT COUNT(*) FROM catalog").fetchone()[0]

    def record_count(self, kind: SeriesKind = SeriesKind.RAW) -> int:
        """Full recount of stored observations of one kind. The headline
        record count is raw observations; derived rows are recomputable."""
        with self._lock:
            return self._conn.execute(
                "SELECT COUNT(*) FROM observations WHERE kind = ?", (kind.value,)
            ).fetchone()[0]

    def recent_log(self, limit: int = 20) -> list[IngestLogEntry]:
        with self._lock:
            rows = self._conn.execute(
                """
                SELECT started_at, duration, series_count, record_count, outcome, detail
                FROM ingest_log ORDER BY id DESC LIMIT ?
                """,
                (limit,),
            ).fetchall()
        return [
            IngestLogEntry(
                started_at=datetime.fromisoformat(started),
                duration=duration,
                series_count=series_count,
                record_count=record_count,
                outcome=IngestOutcome(outcome),
                detail=detail,
            )
            for started, duration, series_count, record_count, outcome, detail in rows
        ]

    def last_ingest_time(self) -> Optional[datetime]:
        with self._lock:
            row = self._conn.execute(
                "SELECT started_at FROM ingest_log ORDER BY id DESC LIMIT 1"
            ).fetchone()
        return datetime.fromisoformat(row[0]) if row else None

    def status(self, now: Optional[datetime] = None) -> StoreStatus:
        """Freshness status: GREEN within 30 days of the last ingest, YELLOW
        within 183 days, RED beyond or when no ingest has ever run."""
        now = now or datetime.now(timezone.utc)
        last = self.last_ingest_time()
        if last is None:
            color = StatusColor.RED
        else:
            gap = now - last
            if gap <= GREEN_WINDOW:
                color = StatusColor.GREEN
            elif gap <= YELLOW_WINDOW:
                color = StatusColor.YELLOW
            else:
                color = StatusColor.RED
        return StoreStatus(
            color=color,
            last_ingest=last,
            series_count=self.series_count(),
            record_count=self.record_count(),
            app_version=__version__,
        )

    def digest(self) -> str:
        """Content hash over catalog and observations (the ingest log is
        excluded: re-running an identical ingest must not change data)."""
        h = hashlib.sha256()
        with self._lock:
            for row in self._conn.execute(
                "SELECT * FROM catalog ORDER BY series_id"
            ):
                h.update(repr(row).encode())
            for row in self._conn.execute(
                "SELECT * FROM observations ORDER BY series_id, kind, year, month"
            ):
                h.update(repr(row).encode())
        return h.hexdigest()


class _IngestLock:
    """Context manager combining an in-process mutex with an on-disk lock
    file so concurrent CLI invocations against one store file exclude each
    other."""

    def __init__(self, store: Store):
        self._store = store
        self._lock_path: Optional[Path] = (
            Path(store.path + ".lock") if store.path != ":memory:" else None
        )
        self._fd: Optional[int] = None

    def __enter__(self) -> "_IngestLock":
        if not self._store._ingest_guard.acquire(blocking=False):
            raise IngestInProgress("an ingest run is already in progress")
        if self._lock_path is not None:
            try:
                self._fd = os.open(
                    self._lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY
                )
            except FileExistsError:
                self._store._ingest_guard.release()
                raise IngestInProgress(
                    f"lock file {self._lock_path} exists; another ingest is running"
                ) from None
        return self

    def __exit__(self, *exc_info) -> None:
        if self._fd is not None:
            os.close(self._fd)
            self._lock_path.unlink(missing_ok=True)
        self._store._ingest_guard.release()
