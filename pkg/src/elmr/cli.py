"""Operator entry point: ingest, serve, export, and status subcommands.

Designed for non-interactive schedulers: deterministic output, exit code 0
on success, 2 on a partial ingest, 1 on failure, 64 on usage errors.
Configuration precedence is flags > environment > config file > defaults;
`--show-config` prints the resolved values.
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .api import (
    BadParameter,
    EmptySelection,
    IngestSettings,
    create_app,
    export_series,
)
from .ingestion import (
    DEFAULT_ENDPOINT,
    EmptySeedList,
    FileUnreadable,
    IngestOutcome,
    ingest_all,
    load_seed_list,
)
from .store import (
    IngestInProgress,
    StorageFailure,
    Store,
    StoreVersionMismatch,
    UnknownSeries,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARTIAL = 2
EXIT_USAGE = 64

DEFAULT_STORE = "elmr.sqlite"
DEFAULT_PORT = 8000


class UsageError(ValueError):
    """Bad invocation or unusable input file; exits 64."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; schedulers here expect 64.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass(frozen=True)
class CliConfig:
    store_path: str
    endpoint: str
    api_key: Optional[str]
    port: int

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise UsageError(f"port {self.port} out of range 1-65535")
        parent = Path(self.store_path).resolve().parent
        if not parent.is_dir():
            raise UsageError(f"store directory {parent} does not exist")


def read_config_file(path: str | Path) -> dict[str, str]:
    """Flat `key = value` lines; blank lines and # comments ignored."""
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for line in text.splitlines():
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        if "=" not in entry:
            raise UsageError(f"config line not key = value: {line!r}")
        key, _, value = entry.partition("=")
        values[key.strip()] = value.strip()
    return values


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Apply precedence: flags > environment > config file > defaults."""
    file_values = read_config_file(args.config) if args.config else {}

    def pick(flag, env_name, file_key, default):
        if flag is not None:
            return flag
        env_value = os.environ.get(env_name)
        if env_value:
            return env_value
        if file_key in file_values:
            return file_values[file_key]
        return default

    port = pick(args.port, "ELMR_PORT", "port", DEFAULT_PORT)
    try:
        port = int(port)
    except ValueError as exc:
        raise UsageError(f"port must be an integer, not {port!r}") from exc
    return CliConfig(
        store_path=str(pick(args.store, "ELMR_STORE", "store", DEFAULT_STORE)),
        endpoint=str(pick(args.endpoint, "BLS_ENDPOINT", "endpoint", DEFAULT_ENDPOINT)),
        api_key=pick(args.api_key, "BLS_API_KEY", "api_key", None),
        port=port,
    )


def _open_existing_store(config: CliConfig) -> Store:
    if not Path(config.store_path).exists():
        raise StorageFailure(
            f"no store at {config.store_path}; run the ingest command first"
        )
    return Store(config.store_path)


def cmd_ingest(args: argparse.Namespace, config: CliConfig) -> int:
    try:
        seed_ids = load_seed_list(args.seed)
    except (FileUnreadable, EmptySeedList) as exc:
        print(f"ingest: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with Store(config.store_path) as store:
        try:
            entry = ingest_all(
                seed_ids,
                args.start,
                args.end,
                store,
                endpoint_url=config.endpoint,
                api_key=config.api_key,
            )
        except IngestInProgress as exc:
            print(f"ingest: {exc}", file=sys.stderr)
            return EXIT_FAILED
    print(
        f"{entry.outcome.value}: {entry.series_count} series, "
        f"{entry.record_count} records in {entry.duration:.2f}s"
    )
    if entry.outcome is not IngestOutcome.SUCCESS:
        print(entry.detail, file=sys.stderr)
    return {
        IngestOutcome.SUCCESS: EXIT_OK,
        IngestOutcome.PARTIAL: EXIT_PARTIAL,
        IngestOutcome.FAILED: EXIT_FAILED,
    }[entry.outcome]


def cmd_serve(args: argparse.Namespace, config: CliConfig) -> int:
    import uvicorn

    try:
        store = _open_existing_store(config)
    except (StorageFailure, StoreVersionMismatch) as exc:
        print(f"serve: {exc}", file=sys.stderr)
        return EXIT_FAILED

    ingest_settings = None
    if args.seed:
        try:
            ingest_settings = IngestSettings(
                endpoint_url=config.endpoint,
                seed_ids=tuple(load_seed_list(args.seed)),
                start_year=args.start,
                end_year=args.end,
                api_key=config.api_key,
            )
        except (FileUnreadable, EmptySeedList) as exc:
            print(f"serve: {exc}", file=sys.stderr)
            return EXIT_USAGE

    # Probe the port up front so a taken port is a clean exit, not a stack
    # trace from deep inside the server loop.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, config.port))
    except OSError as exc:
        print(f"serve: cannot bind {args.host}:{config.port}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    finally:
        probe.close()

    ui_dir = args.ui
    if ui_dir is None:
        # A dashboard built next to the package is picked up automatically.
        candidate = Path("frontend") / "dist"
        if (candidate / "index.html").is_file():
            ui_dir = str(candidate)

    app = create_app(store, ingest_settings=ingest_settings, static_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=config.port, log_level="warning")
    return EXIT_OK


def cmd_export(args: argparse.Namespace, config: CliConfig) -> int:
    ids = [x for x in (part.strip() for part in args.ids.split(",")) if x]
    try:
        store = _open_existing_store(config)
    except (StorageFailure, StoreVersionMismatch) as exc:
        print(f"export: {exc}", file=sys.stderr)
        return EXIT_FAILED
    with store:
        try:
            body, _ = export_series(store, ids, args.format, args.start, args.end)
        except UnknownSeries as exc:
            print(f"export: unknown series: {exc.args[0]}", file=sys.stderr)
            return EXIT_FAILED
        except (EmptySelection, BadParameter) as exc:
            print(f"export: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.out:
        Path(args.out).write_bytes(body)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(body.decode())
    return EXIT_OK


def cmd_status(args: argparse.Namespace, config: CliConfig) -> int:
    try:
        store = _open_existing_store(config)
    except (StorageFailure, StoreVersionMismatch) as exc:
        print(f"status: {exc}", file=sys.stderr)
        return EXIT_FAILED
    with store:
        status = store.status()
    last = status.last_ingest.isoformat() if status.last_ingest else "never"
    print(
        f"{status.color.value}: {status.series_count} series, "
        f"{status.record_count} records, last ingest {last}, "
        f"version {status.app_version}"
    )
    return EXIT_OK


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--store", help=f"store file path (default {DEFAULT_STORE})")
    common.add_argument("--endpoint", help="data API endpoint URL")
    common.add_argument("--api-key", dest="api_key", help="API registration key")
    common.add_argument("--port", type=int, default=None, help="port for serve")
    common.add_argument("--config", help="flat key = value config file")
    common.add_argument(
        "--show-config",
        action="store_true",
        help="print the resolved configuration and exit",
    )

    parser = _Parser(
        prog="elmr",
        description="Labor-statistics pipeline: ingest, serve, export, status.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_ingest = sub.add_parser("ingest", parents=[common], help="fetch and store series")
    p_ingest.add_argument("--seed", required=True, help="seed list file of series ids")
    p_ingest.add_argument("--start", type=int, required=True, help="first year")
    p_ingest.add_argument("--end", type=int, required=True, help="last year")
    p_ingest.set_defaults(func=cmd_ingest)

    p_serve = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1", help="bind address")
    p_serve.add_argument("--ui", help="directory of built dashboard assets")
    p_serve.add_argument("--seed", help="seed list enabling the ingest trigger")
    p_serve.add_argument("--start", type=int, default=2000, help="ingest-trigger first year")
    p_serve.add_argument("--end", type=int, default=2015, help="ingest-trigger last year")
    p_serve.set_defaults(func=cmd_serve)

    p_export = sub.add_parser("export", parents=[common], help="write series as CSV/JSON")
    p_export.add_argument("--ids", required=True, help="comma-separated series ids")
    p_export.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    p_export.add_argument("--start", type=int, default=None, help="first year")
    p_export.add_argument("--end", type=int, default=None, help="last year")
    p_export.add_argument("--out", help="output file (default stdout)")
    p_export.set_defaults(func=cmd_export)

    p_status = sub.add_parser("status", parents=[common], help="print store freshness")
    p_status.set_defaults(func=cmd_status)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = resolve_config(args)
    except UsageError as exc:
        print(f"elmr: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.show_config:
        print(f"store = {config.store_path}")
        print(f"endpoint = {config.endpoint}")
        print(f"api_key = {config.api_key or ''}")
        print(f"port = {config.port}")
        return EXIT_OK
    return args.func(args, config)


if __name__ == "__main__":
    raise SystemExit(main())
