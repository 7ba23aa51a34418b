# Ingest walkthrough: pull a dozen labor series from an API endpoint into a
# local store, then read the freshness status and the audit log.
#
# The package ships a small offline corpus and an HTTP server that speaks the
# public API's wire format, so everything here runs without network access.
# Point `endpoint_url` at the real service to ingest live data instead.

import tempfile
from importlib import resources
from pathlib import Path

from elmr.fixture_server import serve_fixture
from elmr.ingestion import load_seed_list, ingest_all
from elmr.store import Store

seed_path = resources.files("elmr.data").joinpath("fixture_seed.txt")
seed_ids = load_seed_list(str(seed_path))
print(f"seed list: {len(seed_ids)} series")
for sid in seed_ids[:4]:
    print(f"  {sid}")
print("  ...")

# A file-backed store persists between runs; ":memory:" works for scratch use.
store_path = Path(tempfile.mkdtemp()) / "demo.sqlite"

with serve_fixture() as endpoint_url:
    print(f"\nfixture endpoint: {endpoint_url}")
    with Store(str(store_path)) as store:
        entry = ingest_all(seed_ids, 2000, 2015, store, endpoint_url=endpoint_url)
        print(f"outcome: {entry.outcome.value}")
        print(f"ingested {entry.series_count} series, {entry.record_count} records "
              f"in {entry.duration:.2f}s")

        # Status is GREEN for 30 days after a successful run, YELLOW to 183,
        # RED after that or before any ingest.
        status = store.status()
        print(f"\nstatus: {status.color.value}")
        print(f"  series_count={status.series_count} record_count={status.record_count}")
        print(f"  last_ingest={status.last_ingest}")

        # Every run appends one audit row, newest first.
        print("\ningest log:")
        for row in store.recent_log(limit=5):
            print(f"  {row.started_at:%Y-%m-%d %H:%M} {row.outcome.value:8s}"
                  f" {row.series_count} series / {row.record_count} records")

        # Running the same ingest again changes nothing: same digest.
        before = store.digest()
        ingest_all(seed_ids, 2000, 2015, store, endpoint_url=endpoint_url)
        print(f"\nre-ingest digest unchanged: {store.digest() == before}")

print(f"\nstore on disk: {store_path}")
