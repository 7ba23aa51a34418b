"""Local HTTP server speaking the public time-series API wire format,
backed by the packaged fixture corpus.

Lets the whole pipeline run offline and deterministically: tests and demos
point the ingester at this server instead of the live endpoint. Options
simulate failure modes (refusal status, dropped series, malformed body).
"""

from __future__ import annotations

import argparse
import calendar
import json
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from typing import Iterator, Optional

CORPUS_RESOURCE = "fixture_corpus.json"


def load_corpus() -> dict:
    """The packaged fixture corpus: declared totals plus per-series rows."""
    path = resources.files("elmr.data").joinpath(CORPUS_RESOURCE)
    return json.loads(path.read_text())


def _period_name(period: str) -> str:
    if period == "M13":
        return "Annual"
    return calendar.month_name[int(period[1:])]


@dataclass
class FixtureOptions:
    """Failure-mode switches for exercising client error paths."""

    drop_series: set[str] = field(default_factory=set)
    fail_status: Optional[str] = None
    malformed_body: bool = False


class FixtureApi:
    """Pure request→response logic, kept separate from the HTTP plumbing so
    tests can call it directly."""

    def __init__(self, corpus: Optional[dict] = None,
                 options: Optional[FixtureOptions] = None):
        self.corpus = corpus or load_corpus()
        self.options = options or FixtureOptions()
        self._by_id = {s["series_id"]: s for s in self.corpus["series"]}

    def respond(self, body: dict) -> dict:
        if self.options.fail_status:
            return {
                "status": self.options.fail_status,
                "responseTime": 1,
                "message": ["fixture configured to refuse this request"],
                "Results": {},
            }
        series_ids = body.get("seriesid", [])
        start_year = int(body.get("startyear", 0))
        end_year = int(body.get("endyear", 9999))
        out = []
        for sid in series_ids:
            entry = self._by_id.get(sid)
            if entry is None or sid in self.options.drop_series:
                continue
            rows = [
                {
                    "year": str(row["year"]),
                    "period": row["period"],
                    "periodName": _period_name(row["period"]),
                    "value": row["value"],
                    "footnotes": [{}],
                }
                for row in entry["data"]
                if start_year <= row["year"] <= end_year
            ]
            # Newest first, as the live endpoint responds.
            rows.sort(key=lambda r: (r["year"], r["period"]), reverse=True)
            out.append(
                {
                    "seriesID": sid,
                    "catalog": {"series_title": entry["title"]},
                    "data": rows,
                }
            )
        return {
            "status": "REQUEST_SUCCEEDED",
            "responseTime": 1,
            "message": [],
            "Results": {"series": out},
        }


def _make_handler(api: FixtureApi) -> type[BaseHTTPRequestHandler]:
    class Handler(BaseHTTPRequestHandler):
        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            try:
                body = json.loads(self.rfile.read(length))
            except ValueError:
                self.send_error(400, "request body is not JSON")
                return
            if api.options.malformed_body:
                payload = b"this is not the wire format"
            else:
                payload = json.dumps(api.respond(body)).encode()
            self.send_response(200)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def log_message(self, *args):
            pass

    return Handler


@contextmanager
def serve_fixture(
    corpus: Optional[dict] = None,
    options: Optional[FixtureOptions] = None,
    port: int = 0,
) -> Iterator[str]:
    """Run the fixture server on a background thread; yields its base URL."""
    api = FixtureApi(corpus, options)
    server = ThreadingHTTPServer(("127.0.0.1", port), _make_handler(api))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        yield f"http://127.0.0.1:{server.server_address[1]}/"
    finally:
        server.shutdown()
        server.server_close()
        thread.join(timeout=5)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        description="Serve the fixture corpus over the time-series API wire format."
    )
    parser.add_argument("--port", type=int, default=8999)
    args = parser.parse_args(argv)
    api = FixtureApi()
    server = ThreadingHTTPServer(("127.0.0.1", args.port), _make_handler(api))
    print(f"fixture server listening on http://127.0.0.1:{args.port}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
