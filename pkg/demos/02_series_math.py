# Series wrangling walkthrough: periods, gaps, percent change, and the
# two headline numbers.

from elmr.fixture_server import serve_fixture
from elmr.ingestion import load_seed_list, ingest_all
from elmr.store import Store
from elmr.wrangling import (
    Period,
    SeriesKind,
    compute_headline,
    delta_over_range,
    interpolate_gaps,
    percent_change,
)
from importlib import resources

store = Store(":memory:")
seed_ids = load_seed_list(str(resources.files("elmr.data").joinpath("fixture_seed.txt")))
with serve_fixture() as url:
    ingest_all(seed_ids, 2000, 2015, store, endpoint_url=url)

# Periods are calendar months with simple arithmetic across year boundaries.
p = Period.parse("2014-11")
print(f"{p} plus 4 months -> {p.minus(-4)}")

# A monthly series stores explicit nulls where the source had no value.
# This one has a three-month reporting gap in 2003.
series = store.get_observations("LNS11300000")
window = [(str(per), val) for per, val in series.observations
          if Period(2003, 3) <= per <= Period(2003, 9)]
print("\nraw values around the gap:")
for period_text, value in window:
    print(f"  {period_text}  {'null' if value is None else value}")

# interpolate_gaps fills interior runs of nulls linearly; endpoints stay put.
filled = interpolate_gaps(series)
print("\nafter linear interpolation:")
for per, val in filled.observations:
    if Period(2003, 3) <= per <= Period(2003, 9):
        print(f"  {per}  {val:.3f}")

# percent_change derives the month-over-month rate of change. Nulls and
# zero bases propagate as nulls rather than raising.
raw = store.get_observations("CES0000000001")
pct = percent_change(raw)
print("\nnonfarm payrolls, last three month-over-month changes:")
for (per, level), (_, rate) in list(zip(raw.observations, pct.observations))[-3:]:
    print(f"  {per}  level={level:>9.1f}  change={rate:+.3f}%")

# The store materializes the same derivation, so reads are cheap.
stored_pct = store.get_observations("CES0000000001", kind=SeriesKind.PERCENT_CHANGE)
print(f"stored derivation matches: {stored_pct.observations == pct.observations}")

# delta_over_range gives absolute and percent change between two periods.
absolute, percent = delta_over_range(raw, Period(2010, 1), Period(2015, 1))
print(f"\npayrolls 2010-01 to 2015-01: {absolute:+.1f} thousand ({percent:+.2f}%)")

# compute_headline pairs the unemployment rate with the payroll level and
# each one's change from the prior month.
headline = compute_headline(store, Period(2015, 2))
print(f"\nheadline for {headline.period}:")
print(f"  unemployment rate {headline.unemployment_rate}%"
      f" ({headline.rate_delta:+.1f} vs prior month)")
print(f"  nonfarm payrolls {headline.nonfarm_level:,.0f}k"
      f" ({headline.nonfarm_delta:+,.0f}k vs prior month)")

store.close()
