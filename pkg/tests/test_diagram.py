"""Gauss code parsing, strand/crossing tables, symmetries."""

import pytest

from bridgekit import (
    Crossing,
    Diagram,
    DuplicatePassage,
    EdgeOutOfRange,
    GaussEntry,
    MalformedToken,
    Passage,
    Sign,
    Strand,
    UnpairedCrossing,
    canonical_form,
    from_entries,
    parse_gauss,
    rotated,
    serialize,
)

TREFOIL = "O1U2O3U1O2U3"


# ── parsing ─────────────────────────────────────────────────────────────


def test_parse_plain():
    d = parse_gauss(TREFOIL)
    assert d.n == 3
    assert [e.crossing_id for e in d.entries] == [1, 2, 3, 1, 2, 3]
    assert [e.passage for e in d.entries] == [
        Passage.OVER, Passage.UNDER, Passage.OVER,
        Passage.UNDER, Passage.OVER, Passage.UNDER,
    ]


@pytest.mark.parametrize(
    "text",
    [
        "O1U2O3U1O2U3",
        "o1u2o3u1o2u3",
        "O1,U2,O3,U1,O2,U3",
        "O1 U2 O3 U1 O2 U3",
        " O1  U2,O3\tU1 , O2 U3 ",
    ],
)
def test_parse_separator_and_case_variants(text):
    assert serialize(parse_gauss(text)) == TREFOIL


def test_parse_signs_preserved():
    d = parse_gauss("O1+U2-O3+U1+O2-U3+")
    assert d.entries[0].sign is Sign.PLUS
    assert d.entries[1].sign is Sign.MINUS
    assert serialize(d) == "O1+U2-O3+U1+O2-U3+"


def test_parse_empty_is_unknot():
    d = parse_gauss("")
    assert d.n == 0
    assert d.n_strands == 1
    assert serialize(d) == ""


def test_parse_renumbers_sparse_ids():
    d = parse_gauss("O7U9O12U7O9U12")
    assert serialize(d) == TREFOIL


def test_parse_keeps_dense_ids():
    d = parse_gauss("O2U1O3U2O1U3")
    assert [e.crossing_id for e in d.entries] == [2, 1, 3, 2, 1, 3]


def test_parse_malformed_token():
    with pytest.raises(MalformedToken) as exc:
        parse_gauss("O1U2XX")
    assert exc.value.position == 4


def test_parse_duplicate_passage():
    with pytest.raises(DuplicatePassage):
        parse_gauss("O1O1")


def test_parse_unpaired():
    with pytest.raises(UnpairedCrossing):
        parse_gauss("O1U2O2")


def test_from_entries_renumbers():
    entries = [
        GaussEntry(5, Passage.OVER),
        GaussEntry(9, Passage.UNDER),
        GaussEntry(5, Passage.UNDER),
        GaussEntry(9, Passage.OVER),
    ]
    d = from_entries(entries)
    assert [e.crossing_id for e in d.entries] == [1, 2, 1, 2]


# ── strand and crossing tables ──────────────────────────────────────────


def test_trefoil_strands():
    d = parse_gauss(TREFOIL)
    assert d.strands == (
        Strand(strand_id=1, span=(2,)),
        Strand(strand_id=2, span=(4,)),
        Strand(strand_id=3, span=(0,)),
    )


def test_trefoil_crossings():
    d = parse_gauss(TREFOIL)
    assert d.crossings == (
        Crossing(crossing_id=1, over_strand=3, under_pair=(1, 2)),
        Crossing(crossing_id=2, over_strand=2, under_pair=(3, 1)),
        Crossing(crossing_id=3, over_strand=1, under_pair=(2, 3)),
    )


def test_kink_tables():
    d = parse_gauss("O1U1")
    assert d.n_strands == 1
    assert d.strands == (Strand(strand_id=1, span=(0,)),)
    assert d.crossings == (Crossing(crossing_id=1, over_strand=1, under_pair=(1, 1)),)


def test_empty_diagram_single_strand():
    d = Diagram(())
    assert d.strands == (Strand(strand_id=1, span=()),)
    assert d.crossings == ()


def test_strand_count_equals_crossing_count():
    for code in (TREFOIL, "O1U1", "O2U1O4U3O1U2O3U4"):
        d = parse_gauss(code)
        assert d.n_strands == d.n


# ── rotation and canonical form ─────────────────────────────────────────


def test_rotated_shifts_start():
    d = parse_gauss(TREFOIL)
    r = rotated(d, 2)
    assert serialize(r) == "O3U1O2U3O1U2"  # entries 2.. then 0..1, ids kept
    assert r.n == 3


def test_rotated_rejects_bad_position():
    with pytest.raises(EdgeOutOfRange):
        rotated(parse_gauss(TREFOIL), 7)


def test_canonical_form_rotation_invariant():
    d = parse_gauss(TREFOIL)
    forms = {serialize(canonical_form(rotated(d, k))) for k in range(6)}
    assert len(forms) == 1


def test_canonical_form_reversal_invariant():
    d = parse_gauss(TREFOIL)
    rev = from_entries(list(reversed(d.entries)))
    assert serialize(canonical_form(rev)) == serialize(canonical_form(d))


def test_canonical_form_idempotent():
    d = parse_gauss("U5O4U3O2U1O5U4O1U2O3")
    c = canonical_form(d)
    assert serialize(canonical_form(c)) == serialize(c)


def test_serialize_roundtrip():
    for code in (TREFOIL, "", "O1U1", "O1+U1-", "O2U1O4U3O1U2O3U4"):
        assert serialize(parse_gauss(code)) == code
