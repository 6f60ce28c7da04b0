"""Gauss codes and the combinatorial tables derived from them.

A knot diagram with n crossings is stored as its Gauss code: the cyclic
sequence of 2n passage entries met while traversing the curve once. Each
entry names a crossing id, whether the curve passes over or under at that
crossing, and an optional writhe sign. Every crossing id appears exactly
twice, once as an over passage and once as an under passage. Signs are
carried through parsing and serialization but play no role in any
computation here.

Strands are the maximal arcs between consecutive under passages. They are
numbered 1..n in cyclic order starting with the arc that begins right
after the first under passage in the stored sequence (a 0-crossing code
has the single strand 1 with an empty span, a 1-crossing code has one
strand that passes over itself). Each crossing then sees three strands:
the strand carrying its over passage, and the ordered pair of strands
ending and starting at its under passage.

No planarity or realizability check is performed: any double occurrence
word is accepted, and all derived quantities are defined combinatorially
on the word itself.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicatePassage,
    EdgeOutOfRange,
    MalformedToken,
    UnpairedCrossing,
)

__all__ = [
    "Passage",
    "Sign",
    "GaussEntry",
    "Strand",
    "Crossing",
    "Diagram",
    "parse_gauss",
    "from_entries",
    "serialize",
    "strand_table",
    "crossing_table",
    "canonical_form",
    "rotated",
]


class Passage(str, Enum):
    OVER = "O"
    UNDER = "U"


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"
    UNSPECIFIED = ""


@dataclass(frozen=True)
class GaussEntry:
    crossing_id: int
    passage: Passage
    sign: Sign = Sign.UNSPECIFIED


@dataclass(frozen=True)
class Strand:
    """A maximal arc between consecutive under passages.

    ``span`` lists the indices (into the entry sequence) of the over
    passages lying on the arc, in traversal order. It may be empty when
    two under passages are adjacent.
    """

    strand_id: int
    span: tuple[int, ...]


@dataclass(frozen=True)
class Crossing:
    """One crossing with its incident strands.

    ``under_pair`` is ordered: the strand ending at the under passage,
    then the strand starting there.
    """

    crossing_id: int
    over_strand: int
    under_pair: tuple[int, int]


_TOKEN = re.compile(r"([OUou])(\d+)([+-]?)")
_SEPARATOR = re.compile(r"[,\s]+")


@dataclass(frozen=True)
class Diagram:
    """An immutable diagram; derived tables are computed lazily and cached."""

    entries: tuple[GaussEntry, ...]
    name: str | None = field(default=None)

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @cached_property
    def strands(self) -> tuple[Strand, ...]:
        return _strand_table(self.entries)

    @cached_property
    def crossings(self) -> tuple[Crossing, ...]:
        return _crossing_table(self.entries, self.strands)

    @property
    def n_strands(self) -> int:
        return len(self.strands)

    def __repr__(self) -> str:  # keep reprs short in test output
        label = f" name={self.name!r}" if self.name else ""
        return f"Diagram({serialize(self)!r}{label})"


def _tokenize(text: str) -> list[GaussEntry]:
    entries: list[GaussEntry] = []
    pos = 0
    end = len(text)
    while pos < end:
        sep = _SEPARATOR.match(text, pos)
        if sep:
            pos = sep.end()
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            nxt = _SEPARATOR.search(text, pos)
            bad = text[pos : nxt.start()] if nxt else text[pos:]
            raise MalformedToken(bad, pos)
        letter, digits, sign = m.groups()
        passage = Passage.OVER if letter in "Oo" else Passage.UNDER
        entries.append(GaussEntry(int(digits), passage, Sign(sign)))
        pos = m.end()
    return entries


def _validate_pairing(entries: list[GaussEntry]) -> None:
    seen: dict[int, list[Passage]] = {}
    for e in entries:
        seen.setdefault(e.crossing_id, []).append(e.passage)
    for cid, passages in seen.items():
        if len(passages) != 2:
            raise UnpairedCrossing(cid, len(passages))
        if passages[0] == passages[1]:
            raise DuplicatePassage(cid, passages[0].value)


def _renumber(entries: list[GaussEntry]) -> list[GaussEntry]:
    ids = {e.crossing_id for e in entries}
    n = len(entries) // 2
    if ids == set(range(1, n + 1)):
        return entries
    mapping: dict[int, int] = {}
    for e in entries:
        mapping.setdefault(e.crossing_id, len(mapping) + 1)
    return [GaussEntry(mapping[e.crossing_id], e.passage, e.sign) for e in entries]


def from_entries(
    entries: Iterable[GaussEntry], name: str | None = None
) -> Diagram:
    """Build a diagram from entries, validating the pairing.

    Ids are renumbered to 1..n by first occurrence unless they already
    form exactly that set.
    """
    lst = list(entries)
    _validate_pairing(lst)
    return Diagram(tuple(_renumber(lst)), name)


def parse_gauss(text: str, name: str | None = None) -> Diagram:
    """Parse a Gauss code.

    Entries look like ``O3+``, ``U1-`` or ``o2``; the letter is case
    insensitive, the sign optional, and entries may be separated by
    commas, whitespace, or nothing at all. The empty string parses to the
    0-crossing diagram (the round unknot).
    """
    return from_entries(_tokenize(text), name)


def serialize(diagram: Diagram) -> str:
    """Render a diagram back to its Gauss code.

    Uses uppercase letters and no separators; signs are emitted exactly
    when present. The 0-crossing diagram serializes to the empty string,
    which ``parse_gauss`` accepts back.
    """
    return "".join(
        f"{e.passage.value}{e.crossing_id}{e.sign.value}" for e in diagram.entries
    )


def _strand_table(entries: tuple[GaussEntry, ...]) -> tuple[Strand, ...]:
    if not entries:
        return (Strand(1, ()),)
    total = len(entries)
    under_positions = [i for i, e in enumerate(entries) if e.passage is Passage.UNDER]
    n = len(under_positions)
    strands = []
    for j in range(n):
        start = under_positions[j]
        stop = under_positions[(j + 1) % n]
        span = []
        i = (start + 1) % total
        while i != stop:
            span.append(i)
            i = (i + 1) % total
        strands.append(Strand(j + 1, tuple(span)))
    return tuple(strands)


def _crossing_table(
    entries: tuple[GaussEntry, ...], strands: tuple[Strand, ...]
) -> tuple[Crossing, ...]:
    if not entries:
        return ()
    n = len(entries) // 2
    strand_at: dict[int, int] = {}
    for s in strands:
        for i in s.span:
            strand_at[i] = s.strand_id
    under_index: dict[int, int] = {}
    under_positions = []
    for i, e in enumerate(entries):
        if e.passage is Passage.UNDER:
            under_index[e.crossing_id] = len(under_positions)
            under_positions.append(i)
    over_at: dict[int, int] = {
        e.crossing_id: i for i, e in enumerate(entries) if e.passage is Passage.OVER
    }
    crossings = []
    for cid in range(1, n + 1):
        j = under_index[cid]
        pred = j if j >= 1 else n
        succ = j + 1
        crossings.append(Crossing(cid, strand_at[over_at[cid]], (pred, succ)))
    return tuple(crossings)


def strand_table(diagram: Diagram) -> tuple[Strand, ...]:
    """The diagram's strands; see the module docstring for the numbering."""
    return diagram.strands


def crossing_table(diagram: Diagram) -> tuple[Crossing, ...]:
    """One record per crossing: over-strand and ordered under pair."""
    return diagram.crossings


def rotated(diagram: Diagram, start: int) -> Diagram:
    """The same cyclic code, stored starting at entry index ``start``."""
    total = len(diagram.entries)
    if total == 0:
        if start != 0:
            raise EdgeOutOfRange(start, total)
        return diagram
    if not 0 <= start < total:
        raise EdgeOutOfRange(start, total)
    entries = diagram.entries[start:] + diagram.entries[:start]
    return Diagram(entries, diagram.name)


def _orbit_key(seq: tuple[GaussEntry, ...]) -> tuple[tuple[int, int], ...]:
    mapping: dict[int, int] = {}
    out = []
    for e in seq:
        label = mapping.setdefault(e.crossing_id, len(mapping) + 1)
        out.append((0 if e.passage is Passage.OVER else 1, label))
    return tuple(out)


def canonical_form(diagram: Diagram) -> Diagram:
    """The least representative of the diagram's symmetry orbit.

    Minimizes over all rotations of the sequence and of its reversal,
    with crossing ids relabeled 1..n by first occurrence and signs
    erased. Entries compare as (passage, id) with over before under.
    The result is a fixed point of this function and two diagrams get
    equal canonical entries exactly when they differ only by rotation,
    reversal, relabeling, or signs. The name is dropped.
    """
    entries = diagram.entries
    if not entries:
        return Diagram(())
    total = len(entries)
    best: tuple[tuple[int, int], ...] | None = None
    for seq in (entries, entries[::-1]):
        for r in range(total):
            key = _orbit_key(seq[r:] + seq[:r])
            if best is None or key < best:
                best = key
    assert best is not None
    rebuilt = tuple(
        GaussEntry(label, Passage.OVER if kind == 0 else Passage.UNDER)
        for kind, label in best
    )
    return Diagram(rebuilt)
