"""Acceptance gate: one test per primary criterion. Each records a
[PASS]/[FAIL] verdict that conftest prints as a summary block at the end
of the run. Oracles are independent recomputations, never the code under
test."""

import functools
import math
import random
import time
from datetime import datetime, timedelta, timezone

from fastapi.testclient import TestClient

from elmr.api import (
    IngestSettings,
    create_app,
    parse_csv_export,
    parse_json_export,
)
from elmr.catalog import STATE_FIPS_CODES
from elmr.ingestion import (
    BatchLimits,
    IngestLogEntry,
    IngestOutcome,
    chunk_requests,
    ingest_all,
)
from elmr.store import StatusColor, Store
from elmr.title_parser import canonical_title, parse_title
from elmr.wrangling import Period, SeriesKind, TimeSeries, percent_change

RATE_DATASET = "unemployment rate|-"

VERDICTS: list[tuple[str, bool]] = []


def criterion(name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                VERDICTS.append((name, False))
                raise
            VERDICTS.append((name, True))
            return result

        return wrapper

    return decorate


@criterion("fixture ingest: declared record count, idempotent re-ingest, under 5 s")
def test_fixture_ingest(fixture_url, seed_ids, corpus):
    declared = corpus["declared"]
    store = Store(":memory:")
    started = time.perf_counter()
    first = ingest_all(seed_ids, 2000, 2015, store,
                       endpoint_url=fixture_url, api_key="acceptance")
    digest_after_first = store.digest()
    second = ingest_all(seed_ids, 2000, 2015, store,
                        endpoint_url=fixture_url, api_key="acceptance")
    elapsed = time.perf_counter() - started

    assert first.outcome is IngestOutcome.SUCCESS
    assert first.series_count == declared["series_count"] == store.series_count()
    assert first.record_count == declared["record_count"] == store.record_count()
    assert second.outcome is IngestOutcome.SUCCESS
    assert store.digest() == digest_after_first, "re-ingest must change nothing"
    assert store.record_count() == declared["record_count"]
    assert elapsed < 5.0, f"two ingest runs took {elapsed:.2f}s"


@criterion("title corpus: 40+ annotated titles all parse; canonical fixed point")
def test_title_corpus(title_corpus, corpus):
    assert len(title_corpus) >= 40
    fixture_titles = {s["title"] for s in corpus["series"]}
    corpus_titles = {e["title"] for e in title_corpus}
    assert fixture_titles <= corpus_titles, "fixture titles must be annotated"
    assert (
        "Tennessee, Professional and Business Services, "
        "Not seasonally adjusted - labor force" in corpus_titles
    )

    failures = []
    for entry in title_corpus:
        parsed = parse_title(entry["title"])
        got = (parsed.geo_name, parsed.modifier, parsed.adjusted,
               parsed.measure.format(), parsed.measure.known, parsed.residual)
        want = (entry["geo"], entry["modifier"], entry["adjusted"],
                entry["measure"], entry["known"], entry["residual"])
        if got != want:
            failures.append((entry["title"], got, want))
        if parse_title(canonical_title(parsed)) != parsed:
            failures.append((entry["title"], "fixed point broken", None))
    assert not failures, failures


@criterion("percent change: 1000-series reconstruction at 1e-9, nulls guarded, under 5 s")
def test_percent_change_reconstruction():
    rng = random.Random(20150206)
    started = time.perf_counter()
    for _ in range(1000):
        length = rng.randint(2, 240)
        # log-space walk, month-over-month ratio within 1e+-3: far wider
        # than real data yet keeps 1 + pc/100 representable at 1e-9
        log_value = rng.uniform(-3.0, 14.0)
        values = []
        for _ in range(length):
            values.append(math.exp(log_value))
            log_value = min(30.0, max(-30.0, log_value + rng.uniform(-6.9, 6.9)))
        series = TimeSeries(
            "R", SeriesKind.RAW,
            [(Period.from_index(Period(2000, 1).index + i), v)
             for i, v in enumerate(values)],
        )
        pc = percent_change(series)
        for i in range(1, length):
            rate = pc.observations[i][1]
            assert rate is not None
            rebuilt = values[i - 1] * (1.0 + rate / 100.0)
            assert math.isclose(rebuilt, values[i], rel_tol=1e-9), (i, values[i])
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"reconstruction took {elapsed:.2f}s"

    # zero denominators and nulls yield null, never an error
    tricky = TimeSeries(
        "T", SeriesKind.RAW,
        [(Period(2000, 1), 0.0), (Period(2000, 2), 7.0), (Period(2000, 3), None),
         (Period(2000, 4), 5.0), (Period(2000, 5), 5.0)],
    )
    derived = [v for _, v in percent_change(tricky).observations]
    assert derived == [None, None, None, None, 0.0]


@criterion("chunk_requests: exact cover on 500 randomized cases")
def test_chunk_partition():
    rng = random.Random(47)
    for case in range(500):
        n_ids = rng.randint(1, 2000)
        start = rng.randint(1990, 2010)
        end = start + rng.randint(0, 29)
        limits = BatchLimits(
            max_series_per_request=rng.randint(1, 100),
            max_years_per_request=rng.randint(1, 30),
        )
        ids = [f"S{i}" for i in range(n_ids)]
        requests = chunk_requests(ids, start, end, limits)

        # brute-force pair enumeration, encoded as ints for speed
        span = end - start + 1
        index_of = {sid: i for i, sid in enumerate(ids)}
        seen = [
            index_of[sid] * span + (year - start)
            for request in requests
            for sid in request.series_ids
            for year in range(request.start_year, request.end_year + 1)
        ]
        assert len(seen) == n_ids * span, f"case {case}: pair count off"
        assert len(set(seen)) == len(seen), f"case {case}: duplicated pair"
        expected_requests = math.ceil(n_ids / limits.max_series_per_request) * math.ceil(
            span / limits.max_years_per_request
        )
        assert len(requests) == expected_requests, f"case {case}: request count off"


@criterion("geo slice: all 51 FIPS keys; delta equals recomputed percent change")
def test_geo_slice_equivalence(client, ingested_store):
    members = {
        "LASST470000000000003": "47",
        "LASST060000000000003": "06",
        "LASST480000000000003": "48",
    }
    for period_text in ("2015-02", "2009-07", "2000-02"):
        period = Period.parse(period_text)
        for delta in (False, True):
            response = client.get(
                f"/api/geo?dataset={RATE_DATASET}&period={period_text}"
                f"&adjusted=true&delta={str(delta).lower()}"
            )
            assert response.status_code == 200
            values = response.json()["values"]
            assert set(values) == set(STATE_FIPS_CODES)
            for sid, fips in members.items():
                raw = ingested_store.get_observations(sid)
                oracle = percent_change(raw).value_at(period) if delta else raw.value_at(period)
                assert values[fips] == oracle, (period_text, delta, fips)
            for fips, value in values.items():
                if fips not in members.values():
                    assert value is None, fips


@criterion("status thresholds: 29/30/31 to G/G/Y and 182/183/184 to Y/Y/R")
def test_status_boundaries():
    now = datetime(2015, 3, 1, tzinfo=timezone.utc)
    expectations = [
        (29, StatusColor.GREEN),
        (30, StatusColor.GREEN),
        (31, StatusColor.YELLOW),
        (182, StatusColor.YELLOW),
        (183, StatusColor.YELLOW),
        (184, StatusColor.RED),
    ]
    for days, expected in expectations:
        store = Store(":memory:")
        store.append_log(
            IngestLogEntry(
                started_at=now - timedelta(days=days),
                duration=1.0,
                series_count=12,
                record_count=2184,
                outcome=IngestOutcome.SUCCESS,
                detail="",
            )
        )
        assert store.status(now).color is expected, f"{days} days"
    assert Store(":memory:").status(now).color is StatusColor.RED


@criterion("export round trip: CSV and JSON reproduce stored values, nulls included")
def test_export_round_trip(client, ingested_store, seed_ids):
    selections = [
        (seed_ids, None, None),                     # everything, full span
        (["SMU06000000000000001"], 2005, 2005),     # window with a null cell
        (["LNS14000000", "LNS11300000"], 2003, 2004),  # window with a gap
    ]
    for ids, start, end in selections:
        window = "".join(
            f"&start={start}&end={end}" if start else "" for _ in [0]
        )
        csv_text = client.get(
            f"/api/export?ids={','.join(ids)}&format=csv{window}"
        ).text
        from_csv = parse_csv_export(csv_text)
        json_body = client.get(
            f"/api/export?ids={','.join(ids)}&format=json{window}"
        ).content
        from_json = parse_json_export(json_body)
        for sid in ids:
            stored = list(
                ingested_store.get_observations(sid, SeriesKind.RAW, start, end).observations
            )
            assert from_json[sid] == stored, (sid, "json")
            # CSV rows cover the union span; restrict to this series' span
            covered = [
                (p, v) for p, v in from_csv[sid]
                if stored and stored[0][0] <= p <= stored[-1][0]
            ]
            assert covered == stored, (sid, "csv")


@criterion("endpoint contracts: status codes, body shapes, byte-identical GETs")
def test_endpoint_contracts(client, fixture_url, seed_ids, corpus):
    def error_shape(response, status, error):
        assert response.status_code == status, response.text
        body = response.json()
        assert set(body) == {"error", "detail"}
        assert body["error"] == error
        assert isinstance(body["detail"], str) and body["detail"]

    # catalog
    body = client.get("/api/catalog").json()
    assert len(body["catalog"]) == corpus["declared"]["series_count"]
    required = {"series_id", "title", "survey", "measure", "modifier",
                "adjusted", "fips", "geo_name", "unit", "dataset"}
    assert all(required <= set(e) for e in body["catalog"])
    error_shape(client.get("/api/catalog?survey=BOGUS"), 400, "BadParameter")

    # series
    body = client.get("/api/series/LNS14000000?kind=pct&start=2001&end=2001").json()
    assert set(body) == {"series_id", "title", "kind", "unit", "observations"}
    assert all(set(o) == {"period", "value"} for o in body["observations"])
    error_shape(client.get("/api/series/ABSENT"), 404, "UnknownSeries")
    error_shape(client.get("/api/series/LNS14000000?kind=x"), 400, "BadParameter")

    # headline
    body = client.get("/api/headline?period=2015-02").json()
    assert set(body) == {"period", "unemployment_rate", "rate_delta",
                         "nonfarm_level", "nonfarm_delta"}
    error_shape(client.get("/api/headline?period=bad"), 400, "BadParameter")
    error_shape(client.get("/api/headline?period=1980-01"), 404, "PeriodMissing")

    # geo
    body = client.get(f"/api/geo?dataset={RATE_DATASET}&period=2015-02").json()
    assert set(body) == {"dataset", "period", "adjusted", "delta", "values"}
    error_shape(client.get("/api/geo?dataset=absent|-&period=2015-02"),
                404, "UnknownDataset")
    error_shape(client.get(f"/api/geo?dataset={RATE_DATASET}&period=1980-01"),
                404, "UnknownPeriod")
    error_shape(client.get(f"/api/geo?dataset={RATE_DATASET}&period=2015-02&delta=x"),
                400, "BadParameter")

    # tree
    tree = client.get("/api/tree").json()
    assert {"label", "color_class", "children"} <= set(tree)

    # export
    response = client.get("/api/export?ids=LNS14000000&format=csv")
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/csv")
    error_shape(client.get("/api/export?ids=NO1,NO2"), 404, "UnknownSeries")
    assert "NO1" in client.get("/api/export?ids=NO1,NO2").json()["detail"]
    error_shape(client.get("/api/export?ids="), 400, "EmptySelection")
    error_shape(client.get("/api/export?ids=LNS14000000&format=xml"),
                400, "BadParameter")

    # admin status
    body = client.get("/api/admin/status").json()
    assert set(body) == {"status", "log"}
    assert set(body["status"]) == {"color", "last_ingest", "series_count",
                                   "record_count", "app_version"}

    # admin ingest trigger: 200 on fresh app, 409 while a run holds the lock
    store = Store(":memory:")
    settings = IngestSettings(endpoint_url=fixture_url, seed_ids=tuple(seed_ids),
                              start_year=2000, end_year=2015)
    trigger_client = TestClient(create_app(store, ingest_settings=settings),
                                raise_server_exceptions=False)
    assert trigger_client.post("/api/admin/ingest").status_code == 200
    with store.ingest_lock():
        error_shape(trigger_client.post("/api/admin/ingest"), 409, "IngestInProgress")

    # unknown query parameters: ignored, flagged in a Warning header
    response = client.get("/api/tree?mystery=1")
    assert response.status_code == 200
    assert "mystery" in response.headers["warning"]

    # repeated identical GETs are byte-identical between ingests
    for url in (
        "/api/catalog",
        "/api/series/CES0000000001?kind=raw",
        "/api/headline?period=2015-01",
        f"/api/geo?dataset={RATE_DATASET}&period=2015-02&delta=true",
        "/api/tree",
        "/api/export?ids=LNS14000000,CES0000000001&format=json",
        "/api/admin/status",
    ):
        assert client.get(url).content == client.get(url).content, url
