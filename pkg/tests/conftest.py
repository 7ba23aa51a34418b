import json
import sys
from importlib import resources
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from elmr.api import create_app
from elmr.fixture_server import load_corpus, serve_fixture
from elmr.ingestion import ingest_all, load_seed_list
from elmr.store import Store

TESTS_DIR = Path(__file__).parent


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def seed_ids():
    return load_seed_list(str(resources.files("elmr.data").joinpath("fixture_seed.txt")))


@pytest.fixture(scope="session")
def fixture_url():
    with serve_fixture() as url:
        yield url


@pytest.fixture(scope="session")
def ingested_store(fixture_url, seed_ids):
    # Shared read-only store; tests that write open their own.
    store = Store(":memory:")
    entry = ingest_all(seed_ids, 2000, 2015, store,
                       endpoint_url=fixture_url, api_key="test-key")
    assert entry.outcome.value == "Success"
    yield store
    store.close()


@pytest.fixture(scope="session")
def client(ingested_store):
    return TestClient(create_app(ingested_store), raise_server_exceptions=False)


@pytest.fixture(scope="session")
def title_corpus():
    return json.loads((TESTS_DIR / "data" / "title_corpus.json").read_text())


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    verdicts = getattr(module, "VERDICTS", None) if module else None
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in verdicts:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}")
