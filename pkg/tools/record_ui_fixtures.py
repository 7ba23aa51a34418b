"""Capture fixture-server API responses as JSON files for the dashboard's
component tests, so they run without a live backend.

Usage: python3 tools/record_ui_fixtures.py [out_dir]
"""

import json
import sys
from importlib import resources
from pathlib import Path

from fastapi.testclient import TestClient

from elmr.api import create_app
from elmr.fixture_server import serve_fixture
from elmr.ingestion import ingest_all, load_seed_list
from elmr.store import Store

CAPTURES = {
    "catalog.json": "/api/catalog",
    "tree.json": "/api/tree",
    "headline.json": "/api/headline?period=2015-02",
    "series_rate_raw.json": "/api/series/LNS14000000?kind=raw",
    "series_rate_pct.json": "/api/series/LNS14000000?kind=pct",
    "series_payrolls_raw.json": "/api/series/CES0000000001?kind=raw",
    # window containing an explicit null (2005-03)
    "series_with_null.json": "/api/series/SMU06000000000000001?kind=raw&start=2005&end=2005",
    "geo_rate_levels.json": "/api/geo?dataset=unemployment rate|-&period=2015-02",
    "geo_rate_delta.json": "/api/geo?dataset=unemployment rate|-&period=2015-02&delta=true",
    "status.json": "/api/admin/status",
}


def main() -> None:
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "frontend/tests/fixtures")
    out_dir.mkdir(parents=True, exist_ok=True)

    seed = load_seed_list(str(resources.files("elmr.data").joinpath("fixture_seed.txt")))
    store = Store(":memory:")
    with serve_fixture() as url:
        ingest_all(seed, 2000, 2015, store, endpoint_url=url)
    client = TestClient(create_app(store))

    for name, path in CAPTURES.items():
        response = client.get(path)
        response.raise_for_status()
        body = json.dumps(response.json(), indent=1, sort_keys=True)
        (out_dir / name).write_text(body + "\n")
        print(f"wrote {out_dir / name}")
    store.close()


if __name__ == "__main__":
    main()
