"""Bundled data: shape, parseability, and a few spot values."""

import pytest

from bridgekit import parse_gauss, serialize
from bridgekit.tables import get_fixture, get_knot, load_fixtures, load_knot_table


def test_table_loads_and_counts():
    table = load_knot_table()
    assert len(table) == 104
    # the rational knots per crossing number follow the known census
    two_bridge = [e for e in table if e.bridge == 2]
    by_crossings = {c: sum(e.crossings == c for e in two_bridge) for c in range(3, 11)}
    assert by_crossings == {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 12, 9: 24, 10: 45}


def test_table_codes_parse_and_roundtrip():
    for entry in load_knot_table():
        d = parse_gauss(entry.code)
        assert d.n == entry.crossings
        assert serialize(d) == entry.code


def test_table_bridge_numbers_in_range():
    for entry in load_knot_table():
        assert entry.bridge in (2, 3)


def test_expected_names_present():
    names = {e.name for e in load_knot_table()}
    for name in ("3_1", "4_1", "5_1", "6_1", "7_7", "8_1", "8_5", "8_17", "8_18",
                 "9_1", "10_1", "torus_3_4", "torus_3_5"):
        assert name in names


def test_spot_values():
    table = {e.name: e for e in load_knot_table()}
    assert table["3_1"].bridge == 2
    assert table["8_17"].bridge == 3
    assert table["8_17"].crossings == 8
    assert table["torus_3_5"].crossings == 10


def test_get_knot_and_fixture():
    d = get_knot("3_1")
    assert d.n == 3
    assert d.name == "3_1"
    with pytest.raises(KeyError):
        get_knot("99_99")
    u = get_fixture("hard_unknot_15")
    assert u.n == 15
    with pytest.raises(KeyError):
        get_fixture("nope")


def test_fixture_entries():
    fixtures = {e.name: e for e in load_fixtures()}
    assert fixtures["unknot_round"].omega == 1
    assert fixtures["unknot_round"].crossings == 0
    assert fixtures["unknot_kinked"].omega == 1
    assert fixtures["hard_unknot_15"].omega == 3
    assert any(e.omega == 2 for e in load_fixtures())
