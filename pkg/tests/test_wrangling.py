import math

import pytest
from hypothesis import given, strategies as st

from elmr.ingestion import RawObservation
from elmr.store import Store
from elmr.wrangling import (
    AlreadyDerived,
    HeadlineConfig,
    Period,
    PeriodMissing,
    RangeOutOfBounds,
    SeriesKind,
    SeriesMissing,
    TimeSeries,
    compute_headline,
    delta_over_range,
    fill_gaps,
    interpolate_gaps,
    normalize_raw,
    percent_change,
)


def series_of(values, start=Period(2000, 1), kind=SeriesKind.RAW, sid="S"):
    obs = []
    p = start
    for v in values:
        obs.append((p, v))
        p = p.next()
    return TimeSeries(series_id=sid, kind=kind, observations=obs)


# -- Period -------------------------------------------------------------------


def test_period_parse_and_str():
    p = Period.parse("2015-02")
    assert (p.year, p.month) == (2015, 2)
    assert str(p) == "2015-02"


def test_period_successor_wraps_year():
    assert Period(2000, 12).next() == Period(2001, 1)
    assert Period(2001, 1).minus(1) == Period(2000, 12)


def test_period_ordering():
    assert Period(2000, 12) < Period(2001, 1) < Period(2001, 2)


def test_period_month_validated():
    with pytest.raises(ValueError):
        Period(2000, 13)
    with pytest.raises(ValueError):
        Period.parse("2000-00")


@given(st.integers(min_value=1900, max_value=2100), st.integers(min_value=1, max_value=12))
def test_period_index_round_trip(year, month):
    p = Period(year, month)
    assert Period.from_index(p.index) == p


def test_timeseries_rejects_unordered():
    with pytest.raises(ValueError):
        TimeSeries("S", SeriesKind.RAW,
                   [(Period(2000, 2), 1.0), (Period(2000, 1), 2.0)])


# -- normalize_raw ------------------------------------------------------------


def raw(year, period, value):
    return RawObservation(year=year, period=period, value_text=value)


def test_normalize_sorts_and_drops_annual_rows():
    series = normalize_raw("S", [raw(2000, "M02", "4.1"), raw(2000, "M01", "4.0"),
                                 raw(2000, "M13", "4.05")])
    assert series.observations == [(Period(2000, 1), 4.0), (Period(2000, 2), 4.1)]


def test_normalize_malformed_value_becomes_null_with_diagnostic():
    diagnostics = []
    series = normalize_raw("S", [raw(2005, "M03", "-")], diagnostics)
    assert series.observations == [(Period(2005, 3), None)]
    assert any("2005-03" in d for d in diagnostics)


def test_normalize_empty_input():
    assert len(normalize_raw("S", [])) == 0


def test_normalize_duplicate_last_wins():
    diagnostics = []
    series = normalize_raw(
        "S", [raw(2000, "M01", "1.0"), raw(2000, "M01", "2.0")], diagnostics
    )
    assert series.observations == [(Period(2000, 1), 2.0)]
    assert len(diagnostics) == 1


@given(
    st.lists(
        st.tuples(
            st.integers(min_value=2000, max_value=2002),
            st.integers(min_value=1, max_value=13),
            st.sampled_from(["1.5", "2.0", "-", "7"]),
        ),
        max_size=40,
    )
)
def test_normalize_count_invariant(rows):
    raws = [raw(y, f"M{m:02d}", v) for y, m, v in rows]
    series = normalize_raw("S", raws)
    monthly_keys = {(y, m) for y, m, _ in rows if m != 13}
    assert len(series) == len(monthly_keys)


# -- fill_gaps / interpolate_gaps ---------------------------------------------


def test_fill_gaps_inserts_nulls():
    series = TimeSeries("S", SeriesKind.RAW,
                        [(Period(2000, 1), 10.0), (Period(2000, 4), 13.0)])
    filled = fill_gaps(series)
    assert filled.observations == [
        (Period(2000, 1), 10.0),
        (Period(2000, 2), None),
        (Period(2000, 3), None),
        (Period(2000, 4), 13.0),
    ]


def test_fill_gaps_fixed_point():
    series = series_of([1.0, 2.0, 3.0])
    assert fill_gaps(series) == series
    assert fill_gaps(fill_gaps(series)) == fill_gaps(series)


def test_fill_gaps_single_observation():
    series = TimeSeries("S", SeriesKind.RAW, [(Period(2000, 1), 1.0)])
    assert fill_gaps(series) == series


@given(st.sets(st.integers(min_value=0, max_value=36), min_size=1, max_size=20))
def test_fill_gaps_never_alters_values(offsets):
    base = Period(2001, 1)
    obs = [(Period.from_index(base.index + o), float(o)) for o in sorted(offsets)]
    series = TimeSeries("S", SeriesKind.RAW, obs)
    filled = fill_gaps(series)
    kept = [(p, v) for p, v in filled.observations if v is not None]
    assert kept == obs
    # contiguity
    periods = [p for p, _ in filled.observations]
    assert all(a.next() == b for a, b in zip(periods, periods[1:]))


def test_interpolate_gaps_linear():
    series = TimeSeries("S", SeriesKind.RAW,
                        [(Period(2000, 1), 10.0), (Period(2000, 4), 13.0)])
    estimated = interpolate_gaps(series)
    assert estimated.value_at(Period(2000, 2)) == pytest.approx(11.0)
    assert estimated.value_at(Period(2000, 3)) == pytest.approx(12.0)


# -- percent_change -----------------------------------------------------------


def test_percent_change_arithmetic():
    pc = percent_change(series_of([100.0, 110.0, 99.0]))
    values = [v for _, v in pc.observations]
    assert values[0] is None
    assert values[1] == pytest.approx(10.0)
    assert values[2] == pytest.approx(-10.0)
    assert pc.kind is SeriesKind.PERCENT_CHANGE


def test_percent_change_constant_series():
    pc = percent_change(series_of([5.0, 5.0, 5.0, 5.0]))
    assert [v for _, v in pc.observations] == [None, 0.0, 0.0, 0.0]


def test_percent_change_zero_denominator():
    pc = percent_change(series_of([0.0, 7.0]))
    assert [v for _, v in pc.observations] == [None, None]


def test_percent_change_null_propagates():
    pc = percent_change(series_of([100.0, None, 120.0]))
    assert [v for _, v in pc.observations] == [None, None, None]


def test_percent_change_rejects_derived_input():
    pc = percent_change(series_of([1.0, 2.0]))
    with pytest.raises(AlreadyDerived):
        percent_change(pc)


def test_percent_change_longer_lag():
    pc = percent_change(series_of([100.0, 0.0, 150.0]), lag=2)
    assert [v for _, v in pc.observations] == [None, None, pytest.approx(50.0)]


@given(
    st.lists(
        # ratio between neighbours capped at 1e5 so 1 + pc/100 keeps
        # enough bits for the 1e-9 reconstruction tolerance
        st.floats(min_value=0.1, max_value=1e4, allow_nan=False),
        min_size=2,
        max_size=60,
    )
)
def test_percent_change_reconstruction(values):
    series = series_of(values)
    pc = percent_change(series)
    rebuilt = values[0]
    for (_, raw_value), (_, pc_value) in list(zip(series.observations, pc.observations))[1:]:
        assert pc_value is not None  # strictly positive input stays total
        rebuilt = rebuilt * (1 + pc_value / 100.0)
        assert math.isclose(rebuilt, raw_value, rel_tol=1e-9)
        rebuilt = raw_value


# -- delta_over_range ---------------------------------------------------------


def test_delta_over_range_spreadsheet_check():
    # 25 months, 100 at 2008-01 sliding to 80 at 2010-01
    values = [100.0 - 20.0 * i / 24.0 for i in range(25)]
    series = series_of(values, start=Period(2008, 1))
    absolute, percent = delta_over_range(series, Period(2008, 1), Period(2010, 1))
    assert absolute == pytest.approx(-20.0)
    assert percent == pytest.approx(-20.0)
    # independent recomputation from the endpoints
    assert absolute == values[-1] - values[0]
    assert percent == 100.0 * (values[-1] - values[0]) / values[0]


def test_delta_over_range_identity():
    series = series_of([42.0, 43.0])
    assert delta_over_range(series, Period(2000, 1), Period(2000, 1)) == (0.0, 0.0)


def test_delta_over_range_null_endpoint():
    series = series_of([None, 43.0])
    assert delta_over_range(series, Period(2000, 1), Period(2000, 2)) == (None, None)


def test_delta_over_range_zero_start():
    series = series_of([0.0, 43.0])
    assert delta_over_range(series, Period(2000, 1), Period(2000, 2)) == (None, None)


def test_delta_over_range_bounds_checked():
    series = series_of([1.0, 2.0])
    with pytest.raises(RangeOutOfBounds):
        delta_over_range(series, Period(2000, 2), Period(2000, 1))
    with pytest.raises(RangeOutOfBounds):
        delta_over_range(series, Period(2000, 1), Period(2001, 1))


# -- compute_headline ---------------------------------------------------------


def corpus_value(corpus, sid, year, month):
    entry = next(s for s in corpus["series"] if s["series_id"] == sid)
    row = next(r for r in entry["data"] if r["year"] == year and r["period"] == f"M{month:02d}")
    return float(row["value"])


def test_headline_matches_direct_subtraction(ingested_store, corpus):
    head = compute_headline(ingested_store, Period(2015, 2))
    rate_now = corpus_value(corpus, "LNS14000000", 2015, 2)
    rate_prior = corpus_value(corpus, "LNS14000000", 2015, 1)
    jobs_now = corpus_value(corpus, "CES0000000001", 2015, 2)
    jobs_prior = corpus_value(corpus, "CES0000000001", 2015, 1)
    assert head.unemployment_rate == rate_now == 5.5
    assert head.rate_delta == rate_now - rate_prior
    assert head.nonfarm_level == jobs_now == 140000.0
    assert head.nonfarm_delta == jobs_now - jobs_prior == 295.0


def test_headline_first_month_deltas_null(ingested_store):
    head = compute_headline(ingested_store, Period(2000, 1))
    assert head.unemployment_rate is not None
    assert head.rate_delta is None
    assert head.nonfarm_delta is None


def test_headline_unknown_period(ingested_store):
    with pytest.raises(PeriodMissing):
        compute_headline(ingested_store, Period(1980, 1))


def test_headline_missing_series():
    with pytest.raises(SeriesMissing):
        compute_headline(Store(":memory:"), Period(2015, 2))


def test_headline_config_names_other_series(ingested_store):
    config = HeadlineConfig(rate_series_id="LASST470000000000003",
                            nonfarm_series_id="SMS47000000000000001")
    head = compute_headline(ingested_store, Period(2015, 2), config)
    assert head.unemployment_rate is not None
    assert head.nonfarm_level is not None
