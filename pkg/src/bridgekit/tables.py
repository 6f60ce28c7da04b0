"""Bundled diagram tables.

Two tab-separated files ship with the package. ``knot_table.tsv`` holds
minimal diagrams of knots through 10 crossings together with their
bridge numbers; ``fixtures.tsv`` holds auxiliary diagrams (unknots of
varying difficulty) with their verified seed counts. Both are generated
and cross-checked by ``tools/make_table.py``; see that script for the
verification performed before emission.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Diagram, parse_gauss

__all__ = [
    "TableEntry",
    "FixtureEntry",
    "load_knot_table",
    "load_fixtures",
    "get_knot",
    "get_fixture",
]


@dataclass(frozen=True)
class TableEntry:
    name: str
    crossings: int
    bridge: int
    code: str

    @property
    def diagram(self) -> Diagram:
        return parse_gauss(self.code, name=self.name)


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    crossings: int
    omega: int
    code: str

    @property
    def diagram(self) -> Diagram:
        return parse_gauss(self.code, name=self.name)


def _read_rows(filename: str, columns: int) -> tuple[tuple[str, ...], ...]:
    text = resources.files("bridgekit.data").joinpath(filename).read_text("utf-8")
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        # the code field of the 0-crossing unknot is empty
        while len(parts) < columns:
            parts.append("")
        rows.append(tuple(parts[:columns]))
    return tuple(rows)


@lru_cache(maxsize=1)
def load_knot_table() -> tuple[TableEntry, ...]:
    """All bundled knots, sorted by crossing number then name."""
    return tuple(
        TableEntry(name, int(crossings), int(bridge), code)
        for name, crossings, bridge, code in _read_rows("knot_table.tsv", 4)
    )


@lru_cache(maxsize=1)
def load_fixtures() -> tuple[FixtureEntry, ...]:
    """Auxiliary diagrams with known seed counts, headed by unknots."""
    return tuple(
        FixtureEntry(name, int(crossings), int(omega), code)
        for name, crossings, omega, code in _read_rows("fixtures.tsv", 4)
    )


def get_knot(name: str) -> Diagram:
    """Look up a bundled knot diagram by table name, e.g. ``"8_17"``."""
    for entry in load_knot_table():
        if entry.name == name:
            return entry.diagram
    raise KeyError(f"no bundled knot named {name!r}")


def get_fixture(name: str) -> Diagram:
    """Look up a bundled fixture diagram by name, e.g. ``"hard_unknot_15"``."""
    for entry in load_fixtures():
        if entry.name == name:
            return entry.diagram
    raise KeyError(f"no bundled fixture named {name!r}")
