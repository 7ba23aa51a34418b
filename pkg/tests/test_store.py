from datetime import datetime, timedelta, timezone

import pytest

from elmr.catalog import GeoArea, Measure, SeriesMeta, Survey, UnitKind
from elmr.ingestion import IngestLogEntry, IngestOutcome
from elmr.store import (
    IngestInProgress,
    StatusColor,
    Store,
    StoreVersionMismatch,
    UnknownSeries,
)
from elmr.wrangling import Period, SeriesKind, TimeSeries, percent_change

NOW = datetime(2015, 3, 1, tzinfo=timezone.utc)


def meta_for(sid="CES0000000001", survey=Survey.CES, geo=None, title=None):
    return SeriesMeta(
        series_id=sid,
        title=title or "Seasonally adjusted - employment",
        survey=survey,
        measure=Measure.parse("employment"),
        modifier=None,
        adjusted=True,
        geo=geo,
        unit=UnitKind.DIMENSIONAL,
    )


def series_for(sid="CES0000000001", years=(2000, 2015), value=100.0):
    obs = []
    p = Period(years[0], 1)
    stop = Period(years[1], 2)
    bump = 0.0
    while p <= stop:
        obs.append((p, value + bump))
        bump += 1.0
        p = p.next()
    return TimeSeries(series_id=sid, kind=SeriesKind.RAW, observations=obs)


def log_entry(started_at, outcome=IngestOutcome.SUCCESS):
    return IngestLogEntry(
        started_at=started_at,
        duration=1.0,
        series_count=12,
        record_count=2184,
        outcome=outcome,
        detail="",
    )


# -- upsert and read back -----------------------------------------------------


def test_upsert_new_series_adds_record_count():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    assert store.record_count() == 182
    assert store.series_count() == 1


def test_upsert_same_series_is_idempotent():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    digest = store.digest()
    store.upsert_series(meta_for(), series_for())
    assert store.record_count() == 182
    assert store.digest() == digest


def test_upsert_revises_single_value():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    revision = TimeSeries(
        "CES0000000001", SeriesKind.RAW, [(Period(2000, 1), 999.0)]
    )
    store.upsert_series(meta_for(), revision)
    assert store.record_count() == 182
    assert store.get_observations("CES0000000001").value_at(Period(2000, 1)) == 999.0
    # neighbors untouched
    assert store.get_observations("CES0000000001").value_at(Period(2000, 2)) == 101.0


def test_upsert_id_mismatch_rejected():
    store = Store(":memory:")
    with pytest.raises(ValueError):
        store.upsert_series(meta_for("A"), series_for("B"))


def test_derived_series_materialized_and_rederived():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    expected = percent_change(series_for())
    stored = store.get_observations("CES0000000001", SeriesKind.PERCENT_CHANGE)
    assert stored.observations == expected.observations
    # revising the raw parent re-derives the percent series
    revision = TimeSeries("CES0000000001", SeriesKind.RAW, [(Period(2000, 1), 50.0)])
    store.upsert_series(meta_for(), revision)
    pc = store.get_observations("CES0000000001", SeriesKind.PERCENT_CHANGE)
    assert pc.value_at(Period(2000, 2)) == pytest.approx(100.0 * (101.0 - 50.0) / 50.0)


def test_get_observations_window():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    window = store.get_observations("CES0000000001", SeriesKind.RAW, 2008, 2010)
    assert len(window) == 36
    full = store.get_observations("CES0000000001")
    assert len(full) == 182
    assert set(window.observations) <= set(full.observations)


def test_get_observations_unknown_series():
    store = Store(":memory:")
    with pytest.raises(UnknownSeries):
        store.get_observations("NOPE")
    with pytest.raises(UnknownSeries):
        store.get_meta("NOPE")


def test_meta_round_trip_with_geography():
    store = Store(":memory:")
    geo = GeoArea(fips="47", name="Tennessee", division="East South Central")
    meta = SeriesMeta(
        series_id="LASST470000000000003",
        title="Tennessee, Seasonally adjusted - unemployment rate",
        survey=Survey.LAUS,
        measure=Measure.parse("unemployment rate"),
        modifier=None,
        adjusted=True,
        geo=geo,
        unit=UnitKind.RATE,
    )
    store.upsert_series(meta, series_for("LASST470000000000003"))
    assert store.get_meta("LASST470000000000003") == meta


def test_list_catalog_grouped_and_sorted(ingested_store):
    metas = ingested_store.list_catalog()
    keys = [(m.survey.value, m.title) for m in metas]
    assert keys == sorted(keys)
    assert len({m.survey for m in metas}) == 4
    laus_only = ingested_store.list_catalog(Survey.LAUS)
    assert laus_only and all(m.survey is Survey.LAUS for m in laus_only)


def test_list_catalog_empty_store():
    assert Store(":memory:").list_catalog() == []


# -- status and log -----------------------------------------------------------


def test_status_red_when_never_ingested():
    status = Store(":memory:").status(NOW)
    assert status.color is StatusColor.RED
    assert status.last_ingest is None
    assert status.series_count == 0


def test_status_thresholds():
    for days, expected in [
        (10, StatusColor.GREEN),
        (90, StatusColor.YELLOW),
        (200, StatusColor.RED),
    ]:
        store = Store(":memory:")
        store.append_log(log_entry(NOW - timedelta(days=days)))
        assert store.status(NOW).color is expected, days


def test_recent_log_newest_first():
    store = Store(":memory:")
    for day in (1, 2, 3):
        store.append_log(log_entry(datetime(2015, 3, day, tzinfo=timezone.utc)))
    log = store.recent_log()
    assert [e.started_at.day for e in log] == [3, 2, 1]
    assert len(store.recent_log(limit=2)) == 2


def test_log_round_trips_fields():
    store = Store(":memory:")
    entry = IngestLogEntry(
        started_at=NOW,
        duration=2.5,
        series_count=11,
        record_count=2002,
        outcome=IngestOutcome.PARTIAL,
        detail="failed 1 of 12: X: no observations in response",
    )
    store.append_log(entry)
    assert store.recent_log() == [entry]


def test_digest_ignores_log_but_sees_data():
    store = Store(":memory:")
    store.upsert_series(meta_for(), series_for())
    digest = store.digest()
    store.append_log(log_entry(NOW))
    assert store.digest() == digest
    revision = TimeSeries("CES0000000001", SeriesKind.RAW, [(Period(2000, 1), 1.0)])
    store.upsert_series(meta_for(), revision)
    assert store.digest() != digest


# -- persistence and locking --------------------------------------------------


def test_file_store_persists_across_reopen(tmp_path):
    path = tmp_path / "data.sqlite"
    with Store(path) as store:
        store.upsert_series(meta_for(), series_for())
    with Store(path) as reopened:
        assert reopened.record_count() == 182
        assert reopened.get_meta("CES0000000001").title == (
            "Seasonally adjusted - employment"
        )


def test_schema_version_mismatch_refused(tmp_path):
    path = tmp_path / "data.sqlite"
    Store(path).close()
    import sqlite3

    conn = sqlite3.connect(path)
    conn.execute("UPDATE meta SET value = '999' WHERE key = 'schema_version'")
    conn.commit()
    conn.close()
    with pytest.raises(StoreVersionMismatch):
        Store(path)


def test_ingest_lock_single_flight(tmp_path):
    path = tmp_path / "data.sqlite"
    store = Store(path)
    lock_path = tmp_path / "data.sqlite.lock"
    with store.ingest_lock():
        assert lock_path.exists()
        with pytest.raises(IngestInProgress):
            store.ingest_lock().__enter__()
        # a second process opening the same store file is excluded too
        other = Store(path)
        with pytest.raises(IngestInProgress):
            other.ingest_lock().__enter__()
    assert not lock_path.exists()
    with store.ingest_lock():
        pass  # reusable after release
