import signal
import socket
import subprocess
import sys
import time
from pathlib import Path

import pytest
import requests

from elmr.api import parse_csv_export
from elmr.cli import EXIT_FAILED, EXIT_OK, EXIT_PARTIAL, EXIT_USAGE, main
from elmr.fixture_server import FixtureOptions, serve_fixture

SEED_FLAGS = ["--start", "2000", "--end", "2015"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("ELMR_STORE", "BLS_API_KEY", "BLS_ENDPOINT", "ELMR_PORT"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture()
def seed_file(seed_ids, tmp_path):
    path = tmp_path / "seed.txt"
    path.write_text("\n".join(seed_ids) + "\n")
    return str(path)


def run_ingest(tmp_path, fixture_url, seed_file, extra=()):
    store = str(tmp_path / "cli.sqlite")
    code = main(["ingest", "--seed", seed_file, "--store", store,
                 "--endpoint", fixture_url, *SEED_FLAGS, *extra])
    return code, store


def test_ingest_success(tmp_path, fixture_url, seed_file, capsys):
    code, _ = run_ingest(tmp_path, fixture_url, seed_file)
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "2184 records" in out
    assert out.startswith("Success: 12 series")


def test_ingest_partial_exit_code(tmp_path, seed_file, capsys):
    with serve_fixture(options=FixtureOptions(drop_series={"LNS12000002"})) as url:
        code, _ = run_ingest(tmp_path, url, seed_file)
    assert code == EXIT_PARTIAL
    assert "LNS12000002" in capsys.readouterr().err


def test_ingest_missing_seed(tmp_path, capsys):
    code = main(["ingest", "--seed", str(tmp_path / "nope.txt"),
                 "--store", str(tmp_path / "s.sqlite"), *SEED_FLAGS])
    assert code == EXIT_USAGE
    assert "nope.txt" in capsys.readouterr().err


def test_status_after_ingest(tmp_path, fixture_url, seed_file, capsys):
    _, store = run_ingest(tmp_path, fixture_url, seed_file)
    capsys.readouterr()
    assert main(["status", "--store", store]) == EXIT_OK
    out = capsys.readouterr().out
    assert "GREEN" in out
    assert "12 series, 2184 records" in out


def test_status_missing_store(tmp_path, capsys):
    assert main(["status", "--store", str(tmp_path / "absent.sqlite")]) == EXIT_FAILED
    assert "run the ingest command first" in capsys.readouterr().err


def test_export_stdout_and_file(tmp_path, fixture_url, seed_file, capsys):
    _, store = run_ingest(tmp_path, fixture_url, seed_file)
    capsys.readouterr()
    code = main(["export", "--store", store, "--ids", "LNS14000000",
                 "--format", "csv", "--start", "2015", "--end", "2015"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "period,LNS14000000"
    assert "2015-02,5.5" in out

    target = tmp_path / "out.csv"
    code = main(["export", "--store", store, "--ids", "LNS14000000",
                 "--out", str(target)])
    assert code == EXIT_OK
    parsed = parse_csv_export(target.read_text())
    assert len(parsed["LNS14000000"]) == 182


def test_export_unknown_series(tmp_path, fixture_url, seed_file, capsys):
    _, store = run_ingest(tmp_path, fixture_url, seed_file)
    capsys.readouterr()
    assert main(["export", "--store", store, "--ids", "NOPE"]) == EXIT_FAILED
    assert "NOPE" in capsys.readouterr().err


def test_export_bad_format_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        main(["export", "--store", str(tmp_path / "s.sqlite"),
              "--ids", "A", "--format", "xml"])
    assert excinfo.value.code == EXIT_USAGE


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == EXIT_USAGE


def test_port_out_of_range(tmp_path, capsys):
    code = main(["status", "--store", str(tmp_path / "s.sqlite"), "--port", "99999"])
    assert code == EXIT_USAGE
    assert "out of range" in capsys.readouterr().err


def test_show_config_precedence(tmp_path, monkeypatch, capsys):
    config = tmp_path / "elmr.conf"
    config.write_text(
        "# service settings\n"
        "store = /from/file.sqlite\n"
        "endpoint = http://file.example/\n"
        "port = 7777\n"
    )
    monkeypatch.setenv("BLS_ENDPOINT", "http://env.example/")
    monkeypatch.setenv("BLS_API_KEY", "env-key")
    code = main(["status", "--config", str(config),
                 "--store", str(tmp_path / "flag.sqlite"), "--show-config"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert f"store = {tmp_path / 'flag.sqlite'}" in out   # flag beats file
    assert "endpoint = http://env.example/" in out        # env beats file
    assert "api_key = env-key" in out                     # env beats default
    assert "port = 7777" in out                           # file beats default


def test_env_store_is_used(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ELMR_STORE", str(tmp_path / "env.sqlite"))
    code = main(["status", "--show-config"])
    assert code == EXIT_OK
    assert f"store = {tmp_path / 'env.sqlite'}" in capsys.readouterr().out


def test_help_enumerates_every_flag(capsys):
    flags = {"--store", "--endpoint", "--api-key", "--port", "--seed",
             "--start", "--end", "--ids", "--format", "--out"}
    seen = set()
    for command in ("ingest", "serve", "export", "status"):
        with pytest.raises(SystemExit) as excinfo:
            main([command, "--help"])
        assert excinfo.value.code == 0
        text = capsys.readouterr().out
        seen |= {flag for flag in flags if flag in text}
    assert seen == flags


def free_port():
    probe = socket.socket()
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]
    probe.close()
    return port


def test_serve_missing_store(tmp_path, capsys):
    code = main(["serve", "--store", str(tmp_path / "absent.sqlite"),
                 "--port", str(free_port())])
    assert code == EXIT_FAILED
    assert "ingest" in capsys.readouterr().err


def test_serve_port_in_use(tmp_path, fixture_url, seed_file, capsys):
    _, store = run_ingest(tmp_path, fixture_url, seed_file)
    capsys.readouterr()
    holder = socket.socket()
    holder.bind(("127.0.0.1", 0))
    holder.listen(1)
    port = holder.getsockname()[1]
    try:
        code = main(["serve", "--store", store, "--port", str(port)])
    finally:
        holder.close()
    assert code == EXIT_FAILED
    assert "cannot bind" in capsys.readouterr().err


def test_serve_end_to_end(tmp_path, fixture_url, seed_file, capsys):
    """Boot the real server process, hit it over HTTP, shut it down."""
    _, store = run_ingest(tmp_path, fixture_url, seed_file)
    capsys.readouterr()
    port = free_port()
    process = subprocess.Popen(
        [sys.executable, "-m", "elmr.cli", "serve", "--store", store,
         "--port", str(port)],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE,
    )
    base = f"http://127.0.0.1:{port}"
    try:
        deadline = time.monotonic() + 15
        status = None
        while time.monotonic() < deadline:
            try:
                status = requests.get(f"{base}/api/admin/status", timeout=1)
                break
            except requests.RequestException:
                if process.poll() is not None:
                    raise AssertionError(
                        f"server exited early: {process.stderr.read().decode()}"
                    )
                time.sleep(0.1)
        assert status is not None and status.status_code == 200
        assert status.json()["status"]["record_count"] == 2184
        index = requests.get(f"{base}/", timeout=5)
        assert index.status_code == 200
    finally:
        process.send_signal(signal.SIGINT)
        try:
            process.wait(timeout=10)
        except subprocess.TimeoutExpired:
            process.kill()
            process.wait(timeout=10)
