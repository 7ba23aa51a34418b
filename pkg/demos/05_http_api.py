# REST walkthrough: every endpoint the dashboard consumes, exercised with
# plain urllib against a server running in this process.

import json
import socket
import threading
import time
import urllib.error
import urllib.request
from importlib import resources

import uvicorn

from elmr.api import IngestSettings, create_app
from elmr.fixture_server import serve_fixture
from elmr.ingestion import load_seed_list, ingest_all
from elmr.store import Store


def get(path):
    with urllib.request.urlopen(base + path) as response:
        return json.loads(response.read())


def pretty(obj):
    text = json.dumps(obj, indent=2)
    lines = text.splitlines()
    return text if len(lines) <= 14 else "\n".join(lines[:14] + ["  ..."])


seed_ids = load_seed_list(str(resources.files("elmr.data").joinpath("fixture_seed.txt")))
store = Store(":memory:")

with serve_fixture() as fixture_url:
    ingest_all(seed_ids, 2000, 2015, store, endpoint_url=fixture_url)

    # Keep ingest configured so POST /api/admin/ingest works over HTTP too.
    settings = IngestSettings(endpoint_url=fixture_url, seed_ids=tuple(seed_ids),
                              start_year=2000, end_year=2015)
    app = create_app(store, ingest_settings=settings)

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    base = f"http://127.0.0.1:{port}"

    server = uvicorn.Server(uvicorn.Config(app, host="127.0.0.1", port=port,
                                           log_level="error"))
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    while not server.started:
        time.sleep(0.02)

    print("GET /api/catalog?survey=LAUS")
    print(pretty(get("/api/catalog?survey=LAUS")["catalog"][0]), "\n")

    print("GET /api/series/LNS14000000?kind=pct&start=2014&end=2015 (last 2 rows)")
    body = get("/api/series/LNS14000000?kind=pct&start=2014&end=2015")
    print(pretty(body["observations"][-2:]), "\n")

    print("GET /api/headline?period=2015-02")
    print(pretty(get("/api/headline?period=2015-02")), "\n")

    print("GET /api/geo?dataset=unemployment rate|-&period=2015-02&delta=true")
    body = get("/api/geo?dataset=unemployment%20rate%7C-&period=2015-02&delta=true")
    shown = {k: v for k, v in body["values"].items() if v is not None}
    print(pretty({**body, "values": shown}), "\n")

    print("GET /api/tree (root labels)")
    tree = get("/api/tree")
    print([child["label"] for child in tree["children"]], "\n")

    print("GET /api/export?ids=LNS14000000&format=csv&start=2015&end=2015")
    with urllib.request.urlopen(
        base + "/api/export?ids=LNS14000000&format=csv&start=2015&end=2015"
    ) as response:
        print(response.read().decode())

    print("GET /api/admin/status")
    print(pretty(get("/api/admin/status")["status"]), "\n")

    print("POST /api/admin/ingest")
    request = urllib.request.Request(base + "/api/admin/ingest", method="POST")
    with urllib.request.urlopen(request) as response:
        print(pretty(json.loads(response.read())), "\n")

    # Errors come back as {"error": <kind>, "detail": <message>}.
    print("GET /api/series/NOPE -> ", end="")
    try:
        get("/api/series/NOPE")
    except urllib.error.HTTPError as err:
        print(f"{err.code} {json.loads(err.read())}")

    server.should_exit = True
    thread.join(timeout=5)

store.close()
