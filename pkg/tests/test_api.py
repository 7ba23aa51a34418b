import pytest
from fastapi.testclient import TestClient

from elmr.api import (
    IngestSettings,
    build_geo_slice,
    build_tree,
    create_app,
    dataset_key,
    export_series,
    parse_csv_export,
    parse_json_export,
)
from elmr.catalog import STATE_FIPS_CODES
from elmr.store import Store
from elmr.wrangling import Period, SeriesKind, percent_change

RATE_DATASET = "unemployment rate|-"


def get_json(client, url, expect=200):
    response = client.get(url)
    assert response.status_code == expect, response.text
    return response.json()


# -- catalog ------------------------------------------------------------------


def test_catalog_lists_all_series(client, corpus):
    body = get_json(client, "/api/catalog")
    assert len(body["catalog"]) == corpus["declared"]["series_count"]
    keys = [(e["survey"], e["title"]) for e in body["catalog"]]
    assert keys == sorted(keys)


def test_catalog_survey_filter(client):
    body = get_json(client, "/api/catalog?survey=laus")
    assert body["catalog"]
    assert all(e["survey"] == "LAUS" for e in body["catalog"])


def test_catalog_bad_survey(client):
    body = get_json(client, "/api/catalog?survey=XXX", expect=400)
    assert body["error"] == "BadParameter"


def test_unknown_query_params_ignored_with_warning(client):
    response = client.get("/api/catalog?survey=CPS&frobnicate=1")
    assert response.status_code == 200
    assert "frobnicate" in response.headers["warning"]
    # same query without the junk parameter returns the same body
    assert response.content == client.get("/api/catalog?survey=CPS").content


# -- series -------------------------------------------------------------------


def test_series_full_span(client):
    body = get_json(client, "/api/series/LNS14000000")
    assert body["kind"] == "raw"
    assert body["unit"] == "rate"
    assert len(body["observations"]) == 182
    assert body["observations"][0]["period"] == "2000-01"
    assert body["observations"][-1] == {"period": "2015-02", "value": 5.5}


def test_series_year_window(client):
    body = get_json(client, "/api/series/LNS14000000?start=2008&end=2010")
    assert len(body["observations"]) == 36
    assert body["observations"][0]["period"] == "2008-01"


def test_series_pct_kind_matches_recomputation(client, ingested_store):
    body = get_json(client, "/api/series/CES0000000001?kind=pct")
    expected = percent_change(ingested_store.get_observations("CES0000000001"))
    got = [(o["period"], o["value"]) for o in body["observations"]]
    assert got == [(str(p), v) for p, v in expected.observations]


def test_series_unknown_id(client):
    body = get_json(client, "/api/series/NOPE", expect=404)
    assert body == {"error": "UnknownSeries", "detail": "NOPE"}


def test_series_bad_kind(client):
    body = get_json(client, "/api/series/LNS14000000?kind=cubic", expect=400)
    assert body["error"] == "BadParameter"


def test_series_bad_year(client):
    body = get_json(client, "/api/series/LNS14000000?start=abc", expect=400)
    assert body["error"] == "BadParameter"


# -- headline -----------------------------------------------------------------


def test_headline_at_period(client):
    body = get_json(client, "/api/headline?period=2015-02")
    assert body["period"] == "2015-02"
    assert body["unemployment_rate"] == 5.5
    assert body["rate_delta"] == pytest.approx(-0.2)
    assert body["nonfarm_level"] == 140000.0
    assert body["nonfarm_delta"] == pytest.approx(295.0)


def test_headline_defaults_to_latest(client):
    assert get_json(client, "/api/headline")["period"] == "2015-02"


def test_headline_unknown_period(client):
    body = get_json(client, "/api/headline?period=1980-01", expect=404)
    assert body["error"] == "PeriodMissing"


def test_headline_bad_period(client):
    assert get_json(client, "/api/headline?period=Feb-2015", expect=400)[
        "error"] == "BadParameter"


# -- geo ----------------------------------------------------------------------


def test_geo_slice_carries_all_states(client, ingested_store):
    body = get_json(
        client, f"/api/geo?dataset={RATE_DATASET}&period=2015-02&adjusted=true&delta=false"
    )
    assert set(body["values"]) == set(STATE_FIPS_CODES)
    assert len(body["values"]) == 51
    # oracle: read each member series directly
    for sid, fips in [
        ("LASST470000000000003", "47"),
        ("LASST060000000000003", "06"),
        ("LASST480000000000003", "48"),
    ]:
        expected = ingested_store.get_observations(sid).value_at(Period(2015, 2))
        assert body["values"][fips] == expected
    populated = {k for k, v in body["values"].items() if v is not None}
    assert populated == {"47", "06", "48"}


def test_geo_delta_equals_recomputed_percent_change(client, ingested_store):
    body = get_json(
        client, f"/api/geo?dataset={RATE_DATASET}&period=2015-02&adjusted=true&delta=true"
    )
    for sid, fips in [
        ("LASST470000000000003", "47"),
        ("LASST060000000000003", "06"),
        ("LASST480000000000003", "48"),
    ]:
        oracle = percent_change(ingested_store.get_observations(sid))
        assert body["values"][fips] == oracle.value_at(Period(2015, 2))


def test_geo_unknown_dataset(client):
    body = get_json(client, "/api/geo?dataset=nonexistent|-&period=2015-02", expect=404)
    assert body["error"] == "UnknownDataset"


def test_geo_unknown_period(client):
    body = get_json(client, f"/api/geo?dataset={RATE_DATASET}&period=1980-01", expect=404)
    assert body["error"] == "UnknownPeriod"


def test_geo_requires_dataset_and_period(client):
    assert get_json(client, "/api/geo", expect=400)["error"] == "BadParameter"


def test_geo_bad_boolean(client):
    body = get_json(
        client, f"/api/geo?dataset={RATE_DATASET}&period=2015-02&adjusted=maybe",
        expect=400,
    )
    assert body["error"] == "BadParameter"


def test_geo_null_inside_member_gap(client):
    # California's rate series has a one-month hole at 2004-02
    body = get_json(
        client, f"/api/geo?dataset={RATE_DATASET}&period=2004-02&adjusted=true&delta=false"
    )
    assert body["values"]["06"] is None
    assert body["values"]["47"] is not None


def test_build_geo_slice_library_surface(ingested_store):
    slice_ = build_geo_slice(
        ingested_store, RATE_DATASET, Period(2015, 2), adjusted=True, delta=False
    )
    assert len(slice_.values) == 51
    assert slice_.values["47"] is not None


# -- tree ---------------------------------------------------------------------


def collect_leaves(node):
    if node.get("series_id"):
        return [node]
    return [leaf for child in node["children"] for leaf in collect_leaves(child)]


def test_tree_leaves_biject_with_catalog(client, ingested_store):
    tree = get_json(client, "/api/tree")
    leaves = collect_leaves(tree)
    leaf_ids = {leaf["series_id"] for leaf in leaves}
    catalog_ids = {m.series_id for m in ingested_store.list_catalog()}
    assert leaf_ids == catalog_ids
    assert len(leaves) == len(catalog_ids)


def test_tree_structure_and_colors(client):
    tree = get_json(client, "/api/tree")
    surveys = {c["label"] for c in tree["children"]}
    assert surveys == {"CPS", "CES", "CESSM", "LAUS"}
    for leaf in collect_leaves(tree):
        assert leaf["children"] == []
        assert leaf["color_class"] in ("rate", "dimensional")
    # a subtree of only rate series is colored rate at the inner node
    laus = next(c for c in tree["children"] if c["label"] == "LAUS")
    rate_node = next(c for c in laus["children"] if c["label"] == "unemployment rate")
    assert rate_node["color_class"] == "rate"
    # internal nodes carry no series_id
    assert "series_id" not in tree
    assert "series_id" not in laus


def test_tree_child_ordering_deterministic(client):
    tree = get_json(client, "/api/tree")
    for survey_node in tree["children"]:
        labels = [c["label"] for c in survey_node["children"]]
        assert labels == sorted(labels)


def test_tree_empty_store():
    tree = build_tree(Store(":memory:"))
    assert tree["children"] == []


# -- export -------------------------------------------------------------------


def test_export_csv_line_count(client):
    response = client.get(
        "/api/export?ids=LNS14000000,CES0000000001&format=csv&start=2008&end=2008"
    )
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/csv")
    lines = response.text.split("\n")
    assert lines[0] == "period,LNS14000000,CES0000000001"
    assert len([l for l in lines if l]) == 13  # header + 12 months
    assert "\r" not in response.text


def test_export_csv_round_trip(client, ingested_store):
    response = client.get("/api/export?ids=LNS14000000,SMU06000000000000001&format=csv")
    parsed = parse_csv_export(response.text)
    for sid in ("LNS14000000", "SMU06000000000000001"):
        stored = ingested_store.get_observations(sid)
        assert parsed[sid] == list(stored.observations)


def test_export_csv_null_becomes_empty_cell(client):
    response = client.get(
        "/api/export?ids=SMU06000000000000001&format=csv&start=2005&end=2005"
    )
    rows = {line.split(",")[0]: line.split(",")[1] for line in
            response.text.splitlines()[1:]}
    assert rows["2005-03"] == ""
    assert rows["2005-02"] != ""


def test_export_json_round_trip(client, ingested_store):
    response = client.get("/api/export?ids=LNS11300000&format=json")
    assert response.headers["content-type"].startswith("application/json")
    parsed = parse_json_export(response.content)
    stored = ingested_store.get_observations("LNS11300000")
    assert parsed["LNS11300000"] == list(stored.observations)


def test_export_unknown_ids_listed(client):
    body = get_json(client, "/api/export?ids=NOPE1,LNS14000000,NOPE2", expect=404)
    assert body["error"] == "UnknownSeries"
    assert "NOPE1" in body["detail"] and "NOPE2" in body["detail"]


def test_export_empty_selection(client):
    assert get_json(client, "/api/export?ids=", expect=400)["error"] == "EmptySelection"


def test_export_bad_format(client):
    body = get_json(client, "/api/export?ids=LNS14000000&format=xml", expect=400)
    assert body["error"] == "BadParameter"


def test_export_library_surface(ingested_store):
    body, media_type = export_series(ingested_store, ["LNS14000000"], "csv", 2015, 2015)
    assert media_type == "text/csv"
    assert body.decode().splitlines()[0] == "period,LNS14000000"


# -- admin --------------------------------------------------------------------


def test_admin_status_counts(client, corpus):
    body = get_json(client, "/api/admin/status")
    assert body["status"]["color"] == "GREEN"
    assert body["status"]["record_count"] == corpus["declared"]["record_count"]
    assert body["status"]["series_count"] == corpus["declared"]["series_count"]
    assert body["status"]["app_version"]
    assert len(body["log"]) == 1
    assert body["log"][0]["outcome"] == "Success"


def test_admin_status_fresh_store():
    client = TestClient(create_app(Store(":memory:")))
    body = client.get("/api/admin/status").json()
    assert body["status"]["color"] == "RED"
    assert body["log"] == []


def test_admin_ingest_not_configured(client):
    assert client.post("/api/admin/ingest").status_code == 400


def test_admin_ingest_trigger_and_conflict(fixture_url, seed_ids):
    store = Store(":memory:")
    settings = IngestSettings(
        endpoint_url=fixture_url, seed_ids=tuple(seed_ids),
        start_year=2000, end_year=2015,
    )
    client = TestClient(create_app(store, ingest_settings=settings),
                        raise_server_exceptions=False)
    response = client.post("/api/admin/ingest")
    assert response.status_code == 200
    assert response.json()["outcome"] == "Success"
    assert store.record_count() == 2184

    # concurrent trigger answers 409 while the lock is held
    with store.ingest_lock():
        conflict = client.post("/api/admin/ingest")
    assert conflict.status_code == 409
    assert conflict.json()["error"] == "IngestInProgress"


# -- cross-cutting ------------------------------------------------------------


def test_repeated_gets_byte_identical(client):
    urls = [
        "/api/catalog",
        "/api/series/LNS14000000?start=2005&end=2010",
        "/api/headline?period=2015-02",
        f"/api/geo?dataset={RATE_DATASET}&period=2015-02",
        "/api/tree",
        "/api/export?ids=LNS14000000,CES0000000001&format=csv",
        "/api/admin/status",
    ]
    for url in urls:
        assert client.get(url).content == client.get(url).content, url


def test_root_serves_fallback_page(client):
    response = client.get("/")
    assert response.status_code == 200
    assert "/api/catalog" in response.text


def test_dataset_key_shape(ingested_store):
    meta = ingested_store.get_meta("LASST470000000000006")
    assert dataset_key(meta) == "labor force|Professional and Business Services"
