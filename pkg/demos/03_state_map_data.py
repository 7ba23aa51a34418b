# Geography walkthrough: one month of a state-level dataset shaped for a
# choropleth map, in levels and in month-over-month percent change.

from importlib import resources

from elmr.api import build_geo_slice, dataset_key
from elmr.wrangling import Period
from elmr.catalog import STATE_AREAS, STATE_FIPS_CODES
from elmr.fixture_server import serve_fixture
from elmr.ingestion import load_seed_list, ingest_all
from elmr.store import Store

store = Store(":memory:")
seed_ids = load_seed_list(str(resources.files("elmr.data").joinpath("fixture_seed.txt")))
with serve_fixture() as url:
    ingest_all(seed_ids, 2000, 2015, store, endpoint_url=url)

# State-level datasets are keyed "<measure>|<modifier or ->". The catalog
# shows which ones this store carries.
datasets = sorted({dataset_key(meta) for meta in store.list_catalog()
                   if meta.geo is not None})
print("state-level datasets in the store:")
for key in datasets:
    print(f"  {key}")

# A slice always carries all 51 state FIPS keys (50 states plus DC);
# states without a series in the dataset map to null.
slice_raw = build_geo_slice(store, "unemployment rate|-", Period.parse("2015-02"),
                            adjusted=True, delta=False)
print(f"\n{slice_raw.dataset} at {slice_raw.period}: {len(slice_raw.values)} keys")
populated = {fips: v for fips, v in slice_raw.values.items() if v is not None}
print(f"populated states: {len(populated)} of {len(STATE_FIPS_CODES)}")
name_of = {area.fips: area.name for area in STATE_AREAS}
for fips in sorted(populated):
    print(f"  {fips} {name_of[fips]:<12} {populated[fips]}")

# delta=True swaps in the stored month-over-month percent change, which a
# map colors on a diverging scale.
slice_delta = build_geo_slice(store, "unemployment rate|-", Period.parse("2015-02"),
                              adjusted=True, delta=True)
print("\nsame slice as percent change from 2015-01:")
for fips in sorted(populated):
    print(f"  {fips} {name_of[fips]:<12} {slice_delta.values[fips]:+.3f}%")

# Months before a state reported anything stay null in that state's cell.
early = build_geo_slice(store, "unemployment rate|-", Period.parse("2004-02"),
                        adjusted=True, delta=False)
gap_states = [f for f in sorted(populated) if early.values[f] is None]
print(f"\nat 2004-02 these otherwise-populated states are null: {gap_states}")

store.close()
