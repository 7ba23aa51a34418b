import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest
from hypothesis import given, settings, strategies as st

from elmr.fixture_server import FixtureApi, FixtureOptions, serve_fixture
from elmr.ingestion import (
    ApiRefusal,
    BatchLimits,
    EmptySeedList,
    FileUnreadable,
    IngestOutcome,
    IngestRequest,
    InvalidRange,
    MalformedPayload,
    RawObservation,
    RetryPolicy,
    Transport,
    chunk_requests,
    default_limits,
    fetch_batch,
    ingest_all,
    load_seed_list,
)
from elmr.store import IngestInProgress, Store
from elmr.wrangling import Period, SeriesKind


# -- seed list ----------------------------------------------------------------


def test_load_seed_list_dedupes_in_order(tmp_path):
    path = tmp_path / "seed.txt"
    path.write_text("# header\nA\nA\nB\n\nC # trailing note\nB\n")
    assert load_seed_list(path) == ["A", "B", "C"]


def test_load_seed_list_missing_file(tmp_path):
    with pytest.raises(FileUnreadable):
        load_seed_list(tmp_path / "absent.txt")


def test_load_seed_list_only_comments(tmp_path):
    path = tmp_path / "seed.txt"
    path.write_text("# nothing\n\n# here\n")
    with pytest.raises(EmptySeedList):
        load_seed_list(path)


def test_packaged_seed_list(seed_ids):
    assert len(seed_ids) == 12
    assert len(set(seed_ids)) == 12


# -- limits and chunking ------------------------------------------------------


def test_default_limits_by_registration():
    keyed = default_limits("some-key")
    assert (keyed.max_series_per_request, keyed.max_years_per_request) == (50, 20)
    anonymous = default_limits(None)
    assert (anonymous.max_series_per_request, anonymous.max_years_per_request) == (25, 10)


def test_batch_limits_validated():
    with pytest.raises(ValueError):
        BatchLimits(max_series_per_request=0, max_years_per_request=5)


def test_chunk_requests_documented_counts():
    ids60 = [f"S{i}" for i in range(60)]
    limits = BatchLimits(max_series_per_request=50, max_years_per_request=10)
    assert len(chunk_requests(ids60, 2000, 2015, limits)) == 4

    assert len(chunk_requests(["A"], 2015, 2015, limits)) == 1

    ids50 = [f"S{i}" for i in range(50)]
    wide = BatchLimits(max_series_per_request=50, max_years_per_request=20)
    assert len(chunk_requests(ids50, 2000, 2015, wide)) == 1


def test_chunk_requests_invalid_range():
    with pytest.raises(InvalidRange):
        chunk_requests(["A"], 2015, 2000,
                       BatchLimits(max_series_per_request=5, max_years_per_request=5))


def assert_exact_cover(requests, ids, start_year, end_year):
    expected = {(sid, year) for sid in ids for year in range(start_year, end_year + 1)}
    seen = []
    for request in requests:
        for sid in request.series_ids:
            for year in range(request.start_year, request.end_year + 1):
                seen.append((sid, year))
    assert len(seen) == len(expected)
    assert set(seen) == expected


@settings(max_examples=60)
@given(
    n_ids=st.integers(min_value=1, max_value=120),
    start=st.integers(min_value=1990, max_value=2020),
    span=st.integers(min_value=0, max_value=29),
    max_series=st.integers(min_value=1, max_value=60),
    max_years=st.integers(min_value=1, max_value=25),
)
def test_chunk_requests_partition_property(n_ids, start, span, max_series, max_years):
    ids = [f"S{i:04d}" for i in range(n_ids)]
    limits = BatchLimits(max_series_per_request=max_series,
                         max_years_per_request=max_years)
    requests = chunk_requests(ids, start, start + span, limits)
    assert_exact_cover(requests, ids, start, start + span)
    n_years = span + 1
    expected_count = (-(-n_ids // max_series)) * (-(-n_years // max_years))
    assert len(requests) == expected_count


def test_ingest_request_validates():
    with pytest.raises(ValueError):
        IngestRequest(series_ids=(), start_year=2000, end_year=2001)
    with pytest.raises(InvalidRange):
        IngestRequest(series_ids=("A",), start_year=2002, end_year=2001)


def test_raw_observation_period_code_validated():
    with pytest.raises(ValueError):
        RawObservation(year=2000, period="M14", value_text="1")
    RawObservation(year=2000, period="M13", value_text="1")  # annual is legal


def test_retry_policy_delays():
    assert list(RetryPolicy(attempts=3, initial_backoff=1.0).delays()) == [1.0, 2.0]


# -- fetch_batch against the fixture server -----------------------------------


def request_for(ids, start, end):
    return IngestRequest(series_ids=tuple(ids), start_year=start, end_year=end)


def test_fetch_batch_two_series_two_years(fixture_url):
    result = fetch_batch(fixture_url,
                         request_for(["LNS14000000", "CES0000000001"], 2000, 2001))
    assert set(result) == {"LNS14000000", "CES0000000001"}
    assert len(result["LNS14000000"]) == 24
    assert len(result["CES0000000001"]) == 24


def test_fetch_batch_unknown_id_yields_empty_with_diagnostic(fixture_url):
    diagnostics = []
    result = fetch_batch(fixture_url, request_for(["NOPE123"], 2000, 2001),
                         diagnostics=diagnostics)
    assert result == {"NOPE123": []}
    assert any("NOPE123" in d for d in diagnostics)


def test_fetch_batch_api_refusal():
    options = FixtureOptions(fail_status="REQUEST_NOT_PROCESSED")
    with serve_fixture(options=options) as url:
        with pytest.raises(ApiRefusal):
            fetch_batch(url, request_for(["LNS14000000"], 2000, 2001))


def test_fetch_batch_malformed_payload():
    with serve_fixture(options=FixtureOptions(malformed_body=True)) as url:
        with pytest.raises(MalformedPayload):
            fetch_batch(url, request_for(["LNS14000000"], 2000, 2001))


def test_fetch_batch_transport_after_retries():
    policy = RetryPolicy(attempts=2, initial_backoff=0.01)
    with pytest.raises(Transport):
        fetch_batch("http://127.0.0.1:9/", request_for(["A"], 2000, 2001), policy)


def test_fetch_batch_retries_through_server_errors():
    # Server answers 500 twice, then behaves; 3 attempts must succeed.
    api = FixtureApi()
    failures_left = [2]

    class Flaky(BaseHTTPRequestHandler):
        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            body = json.loads(self.rfile.read(length))
            if failures_left[0] > 0:
                failures_left[0] -= 1
                self.send_error(500, "transient")
                return
            payload = json.dumps(api.respond(body)).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def log_message(self, *args):
            pass

    server = ThreadingHTTPServer(("127.0.0.1", 0), Flaky)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        url = f"http://127.0.0.1:{server.server_address[1]}/"
        policy = RetryPolicy(attempts=3, initial_backoff=0.01)
        result = fetch_batch(url, request_for(["LNS14000000"], 2000, 2000), policy)
        assert len(result["LNS14000000"]) == 12
        assert failures_left[0] == 0
    finally:
        server.shutdown()
        server.server_close()
        thread.join(timeout=5)


# -- ingest_all ---------------------------------------------------------------


def test_ingest_all_success_counts(ingested_store, corpus):
    assert ingested_store.series_count() == corpus["declared"]["series_count"]
    assert ingested_store.record_count() == corpus["declared"]["record_count"]


def test_ingest_all_is_idempotent(fixture_url, seed_ids):
    store = Store(":memory:")
    first = ingest_all(seed_ids, 2000, 2015, store, endpoint_url=fixture_url)
    digest_one = store.digest()
    second = ingest_all(seed_ids, 2000, 2015, store, endpoint_url=fixture_url)
    assert store.digest() == digest_one
    assert first.outcome is IngestOutcome.SUCCESS
    assert second.outcome is IngestOutcome.SUCCESS
    assert len(store.recent_log()) == 2  # one entry per run


def test_ingest_all_partial_when_series_dropped(seed_ids):
    dropped = "LASST480000000000003"
    with serve_fixture(options=FixtureOptions(drop_series={dropped})) as url:
        store = Store(":memory:")
        entry = ingest_all(seed_ids, 2000, 2015, store, endpoint_url=url)
    assert entry.outcome is IngestOutcome.PARTIAL
    assert entry.series_count == 11
    assert dropped in entry.detail
    assert not store.has_series(dropped)
    assert store.series_count() == 11


def test_ingest_all_failed_when_api_refuses(seed_ids):
    with serve_fixture(options=FixtureOptions(fail_status="REQUEST_NOT_PROCESSED")) as url:
        store = Store(":memory:")
        entry = ingest_all(seed_ids, 2000, 2015, store, endpoint_url=url,
                           retry_policy=RetryPolicy(attempts=1, initial_backoff=0.01))
    assert entry.outcome is IngestOutcome.FAILED
    assert entry.series_count == 0
    assert store.series_count() == 0
    assert len(store.recent_log()) == 1


def test_ingest_all_excluded_while_locked(fixture_url, seed_ids):
    store = Store(":memory:")
    with store.ingest_lock():
        with pytest.raises(IngestInProgress):
            ingest_all(seed_ids, 2000, 2015, store, endpoint_url=fixture_url)


def test_ingested_gaps_are_explicit_nulls(ingested_store):
    # corpus plants a three-month hole in this series
    series = ingested_store.get_observations("LNS11300000")
    assert len(series) == 182
    assert series.value_at(Period(2003, 5)) is None
    assert series.value_at(Period(2003, 6)) is None
    assert series.value_at(Period(2003, 7)) is None
    assert series.value_at(Period(2003, 4)) is not None


def test_ingested_malformed_value_is_null(ingested_store):
    series = ingested_store.get_observations("SMU06000000000000001")
    assert series.value_at(Period(2005, 3)) is None
    assert len(series) == 182


def test_ingested_zero_value_nulls_derived_month(ingested_store):
    raw_series = ingested_store.get_observations("CEU2000000001")
    assert raw_series.value_at(Period(2009, 6)) == 0.0
    pc = ingested_store.get_observations("CEU2000000001", SeriesKind.PERCENT_CHANGE)
    assert pc.value_at(Period(2009, 6)) == pytest.approx(-100.0)  # fell to zero
    assert pc.value_at(Period(2009, 7)) is None  # zero denominator
