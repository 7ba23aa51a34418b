"""Regenerate the fixture corpus and seed list under src/elmr/data/.

Deterministic: values come from per-series seeded random walks, so
re-running this script reproduces the checked-in files byte for byte.
The corpus pins the headline months, plants interior gaps, one zero
value, one malformed value, and a few annual-average (M13) rows.

Run from the repo root:  python tools/gen_fixture.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "elmr" / "data"

START = (2000, 1)
END = (2015, 2)


def month_span(start=START, end=END):
    months = []
    year, month = start
    while (year, month) <= end:
        months.append((year, month))
        month += 1
        if month == 13:
            year, month = year + 1, 1
    return months


MONTHS = month_span()

SERIES = [
    {
        "series_id": "LNS14000000",
        "title": "Seasonally adjusted - unemployment rate",
        "survey": "CPS",
        "kind": "rate",
        "start_value": 4.0,
        "pins": {(2015, 1): "5.7", (2015, 2): "5.5"},
    },
    {
        "series_id": "LNS11300000",
        "title": "Seasonally adjusted - labor force",
        "survey": "CPS",
        "kind": "level",
        "start_value": 142000.0,
        "gaps": [(2003, 5), (2003, 6), (2003, 7)],
        "m13_years": [2000, 2001, 2002],
    },
    {
        "series_id": "LNS12000001",
        "title": "Men, Seasonally adjusted - employment",
        "survey": "CPS",
        "kind": "level",
        "start_value": 72000.0,
        "gaps": [(2008, 3)],
    },
    {
        "series_id": "LNS12000002",
        "title": "Women, Seasonally adjusted - employment",
        "survey": "CPS",
        "kind": "level",
        "start_value": 64000.0,
    },
    {
        "series_id": "CES0000000001",
        "title": "Seasonally adjusted - employment",
        "survey": "CES",
        "kind": "level",
        "start_value": 131000.0,
        "pins": {(2015, 1): "139705.0", (2015, 2): "140000.0"},
    },
    {
        "series_id": "CEU2000000001",
        "title": "Mining and Construction, Not seasonally adjusted - employment",
        "survey": "CES",
        "kind": "level",
        "start_value": 6800.0,
        "gaps": [(2001, 11), (2001, 12)],
        "zeros": [(2009, 6)],
    },
    {
        "series_id": "LASST470000000000003",
        "title": "Tennessee, Seasonally adjusted - unemployment rate",
        "survey": "LAUS",
        "kind": "rate",
        "start_value": 4.5,
    },
    {
        "series_id": "LASST060000000000003",
        "title": "California, Seasonally adjusted - unemployment rate",
        "survey": "LAUS",
        "kind": "rate",
        "start_value": 5.0,
        "gaps": [(2004, 2)],
    },
    {
        "series_id": "LASST480000000000003",
        "title": "Texas, Seasonally adjusted - unemployment rate",
        "survey": "LAUS",
        "kind": "rate",
        "start_value": 4.2,
    },
    {
        "series_id": "LASST470000000000006",
        "title": "Tennessee, Professional and Business Services, "
                 "Not seasonally adjusted - labor force",
        "survey": "LAUS",
        "kind": "level",
        "start_value": 370.0,
        "gaps": [(2010, 9), (2010, 10)],
    },
    {
        "series_id": "SMS47000000000000001",
        "title": "Tennessee, Seasonally adjusted - employment",
        "survey": "CESSM",
        "kind": "level",
        "start_value": 2700.0,
    },
    {
        "series_id": "SMU06000000000000001",
        "title": "California, Not seasonally adjusted - employment",
        "survey": "CESSM",
        "kind": "level",
        "start_value": 14500.0,
        "malformed": [(2005, 3)],
    },
]


def walk_values(spec) -> dict[tuple[int, int], str]:
    rng = random.Random(f"{spec['series_id']}/20150206")
    value = spec["start_value"]
    out = {}
    for year, month in MONTHS:
        if spec["kind"] == "rate":
            value = min(11.0, max(2.5, value + rng.uniform(-0.15, 0.15)))
        else:
            value = max(100.0, value * (1 + rng.uniform(-0.004, 0.005)))
        out[(year, month)] = f"{value:.1f}"
    return out


def build_series(spec) -> dict:
    gaps = set(map(tuple, spec.get("gaps", [])))
    zeros = set(map(tuple, spec.get("zeros", [])))
    malformed = set(map(tuple, spec.get("malformed", [])))
    for bad in gaps:
        assert MONTHS[0] < bad < MONTHS[-1], f"gap {bad} must be interior"
    values = walk_values(spec)
    values.update({tuple(k): v for k, v in spec.get("pins", {}).items()})
    rows = []
    for year, month in MONTHS:
        if (year, month) in gaps:
            continue
        if (year, month) in zeros:
            value = "0.0"
        elif (year, month) in malformed:
            value = "-"
        else:
            value = values[(year, month)]
        rows.append({"year": year, "period": f"M{month:02d}", "value": value})
    for year in spec.get("m13_years", []):
        rows.append({"year": year, "period": "M13", "value": values[(year, 12)]})
    rows.sort(key=lambda r: (r["year"], r["period"]))
    return {
        "series_id": spec["series_id"],
        "title": spec["title"],
        "survey": spec["survey"],
        "data": rows,
    }


def main():
    series = [build_series(spec) for spec in SERIES]
    # Stored-record arithmetic: endpoints are always present, so gap-filling
    # makes every series span the full window.
    record_count = len(SERIES) * len(MONTHS)
    corpus = {
        "declared": {
            "series_count": len(SERIES),
            "record_count": record_count,
            "start": f"{START[0]}-{START[1]:02d}",
            "end": f"{END[0]}-{END[1]:02d}",
        },
        "series": series,
    }
    corpus_path = DATA_DIR / "fixture_corpus.json"
    corpus_path.write_text(json.dumps(corpus, indent=1) + "\n")
    seed_path = DATA_DIR / "fixture_seed.txt"
    seed_lines = ["# Fixture corpus series, one identifier per line."]
    seed_lines += [spec["series_id"] for spec in SERIES]
    seed_path.write_text("\n".join(seed_lines) + "\n")
    print(f"wrote {corpus_path} ({record_count} stored records declared)")
    print(f"wrote {seed_path} ({len(SERIES)} ids)")


if __name__ == "__main__":
    main()
