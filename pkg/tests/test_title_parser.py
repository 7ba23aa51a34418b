import pytest
from hypothesis import given, strategies as st

from elmr.catalog import Measure, Survey, is_state_name, lookup_fips
from elmr.title_parser import (
    DEFAULT_PREFIX_MAP,
    NO_SEASONAL_CLAUSE,
    EmptyTitle,
    ParsedTitle,
    UnknownSurveyPrefix,
    canonical_title,
    load_prefix_map,
    parse_series_id,
    parse_title,
)

CLAUSES = {"seasonally adjusted": True, "not seasonally adjusted": False}


def brute_force_parses(title: str) -> list[tuple]:
    """Independent grammar oracle: enumerate every ' - ' split point and
    every segment assignment, keep the ones the grammar permits."""
    candidates = []
    dash_positions = [i for i in range(len(title)) if title[i : i + 3] == " - "]
    splits = [(title[:i], title[i + 3 :]) for i in dash_positions]
    splits.append(("", title))  # no-dash reading: whole text is the measure
    for pre, measure_text in splits:
        segments = [s.strip() for s in pre.split(",")] if pre.strip() else []
        if segments and segments[-1].lower() in CLAUSES:
            adjusted = CLAUSES[segments[-1].lower()]
            rest, residual = segments[:-1], ""
        else:
            adjusted, rest, residual = False, segments, NO_SEASONAL_CLAUSE
        if rest and is_state_name(rest[0]):
            geo, modifier = lookup_fips(rest[0]).name, ", ".join(rest[1:]) or None
        else:
            geo, modifier = None, ", ".join(rest) or None
        candidates.append(
            (geo, modifier, adjusted, Measure.parse(measure_text.strip()), residual)
        )
    return candidates


def as_tuple(p: ParsedTitle) -> tuple:
    return (p.geo_name, p.modifier, p.adjusted, p.measure, p.residual)


def test_corpus_parses_to_annotations(title_corpus):
    for entry in title_corpus:
        parsed = parse_title(entry["title"])
        assert parsed.geo_name == entry["geo"], entry["title"]
        assert parsed.modifier == entry["modifier"], entry["title"]
        assert parsed.adjusted == entry["adjusted"], entry["title"]
        assert parsed.measure.format() == entry["measure"], entry["title"]
        assert parsed.measure.known == entry["known"], entry["title"]
        assert parsed.residual == entry["residual"], entry["title"]


def test_corpus_canonical_fixed_point(title_corpus):
    for entry in title_corpus:
        parsed = parse_title(entry["title"])
        reparsed = parse_title(canonical_title(parsed))
        assert reparsed == parsed, entry["title"]
        # one canonicalization is a fixed point
        assert canonical_title(reparsed) == canonical_title(parsed)


def test_corpus_agrees_with_brute_force_oracle(title_corpus):
    for entry in title_corpus:
        parsed = as_tuple(parse_title(entry["title"]))
        assert parsed in brute_force_parses(entry["title"]), entry["title"]


def test_mining_title_has_unique_grammar_reading():
    title = "Mining and Construction, Not seasonally adjusted - employment"
    candidates = brute_force_parses(title)
    # the clause-consuming reading; the no-dash reading leaves a clause
    # inside the measure text, which the grammar forbids
    valid = [c for c in candidates if "adjusted" not in c[3].format().lower()]
    assert len(valid) == 1
    assert as_tuple(parse_title(title)) == valid[0]


def test_empty_title_rejected():
    with pytest.raises(EmptyTitle):
        parse_title("   ")


def test_state_match_only_on_first_segment():
    parsed = parse_title("Manufacturing, Texas, Seasonally adjusted - employment")
    assert parsed.geo_name is None
    assert parsed.modifier == "Manufacturing, Texas"


def test_canonical_title_tennessee():
    parsed = ParsedTitle(
        geo_name="Tennessee",
        modifier="Professional and Business Services",
        adjusted=False,
        measure=Measure.parse("labor force"),
    )
    assert canonical_title(parsed) == (
        "Tennessee, Professional and Business Services, "
        "Not seasonally adjusted - labor force"
    )


def test_canonical_title_minimal():
    parsed = ParsedTitle(geo_name=None, modifier=None, adjusted=True,
                         measure=Measure.parse("employment"))
    assert canonical_title(parsed) == "Seasonally adjusted - employment"


_MODIFIER_WORDS = [
    "Men", "Women", "Manufacturing", "Government", "16 to 19 years",
    "Durable Goods", "Virginia Beach", "Leisure and Hospitality",
]
_MEASURE_WORDS = [
    "employment", "unemployment", "unemployment rate", "labor force",
    "participation rate", "average weekly hours", "Men",
]
_STATES = ["Tennessee", "California", "Texas", "New York", "District of Columbia"]


@given(
    geo=st.one_of(st.none(), st.sampled_from(_STATES)),
    modifier=st.one_of(
        st.none(),
        st.lists(st.sampled_from(_MODIFIER_WORDS), min_size=1, max_size=3).map(
            ", ".join
        ),
    ),
    adjusted=st.booleans(),
    measure=st.sampled_from(_MEASURE_WORDS),
)
def test_round_trip_property(geo, modifier, adjusted, measure):
    original = ParsedTitle(
        geo_name=geo, modifier=modifier, adjusted=adjusted,
        measure=Measure.parse(measure),
    )
    assert parse_title(canonical_title(original)) == original


def test_parse_series_id_against_corpus(corpus):
    # each fixture series declares its survey; that is the oracle
    for entry in corpus["series"]:
        assert parse_series_id(entry["series_id"]) is Survey(entry["survey"])


def test_parse_series_id_unknown_prefix():
    with pytest.raises(UnknownSurveyPrefix):
        parse_series_id("XX123")


def test_prefix_map_override(tmp_path):
    path = tmp_path / "prefixes.conf"
    path.write_text("# local conventions\nZZ = LAUS\nLN = CPS\n")
    mapping = load_prefix_map(path)
    assert parse_series_id("ZZ1", mapping) is Survey.LAUS
    assert parse_series_id("LNS14000000", mapping) is Survey.CPS
    with pytest.raises(UnknownSurveyPrefix):
        parse_series_id("CE1", mapping)  # not in the override file


def test_default_prefix_map_covers_four_surveys():
    assert set(DEFAULT_PREFIX_MAP.values()) == set(Survey)
