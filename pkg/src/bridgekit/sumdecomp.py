"""Connected sums of Gauss codes and splitting them back apart.

The sum splices one cyclic code into the other: cut each code at an
edge (the gap before a chosen entry), lay the first code out from its
cut, then append the second from its cut with crossing ids shifted.
Edge position p means "the code restarted at entry p", so the default
edges (0, 0) give plain concatenation.

A diagram is composite exactly when some proper nonempty cyclic segment
is self-paired, meaning every crossing id inside it occurs twice inside
it. Such a segment and its complement are the two halves of a sum.
``is_composite`` returns the witness with the shortest segment (ties to
the least start index), and ``decompose`` recurses on it until every
piece is prime. No segment of that kind exists when n <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coloring import SearchOutcome, SearchStatus, wirtinger_number
from .diagram import Diagram, GaussEntry, from_entries, parse_gauss, serialize
from .errors import EdgeOutOfRange

__all__ = [
    "EdgeRef",
    "SplitWitness",
    "SumCheck",
    "connected_sum",
    "is_composite",
    "decompose",
    "superadditivity_check",
    "reduce_kinks",
]

# Edges are plain ints: position p is the gap entered just before entry p.
EdgeRef = int


@dataclass(frozen=True)
class SplitWitness:
    """A self-paired cyclic segment: entries [start, start+length)."""

    start: int
    length: int


def _check_edge(diagram: Diagram, position: int) -> None:
    total = len(diagram.entries)
    if total == 0:
        if position != 0:
            raise EdgeOutOfRange(position, total)
        return
    if not 0 <= position < total:
        raise EdgeOutOfRange(position, total)


def connected_sum(
    d1: Diagram, d2: Diagram, edge1: EdgeRef = 0, edge2: EdgeRef = 0
) -> Diagram:
    """Splice ``d2`` into ``d1`` at the given edges.

    The result restarts ``d1`` at entry ``edge1``, then appends ``d2``
    restarted at entry ``edge2`` with ids shifted by ``d1.n``. A
    0-crossing summand leaves the other diagram unchanged (position 0 is
    the only edge of the empty code).
    """
    _check_edge(d1, edge1)
    _check_edge(d2, edge2)
    if d1.n == 0:
        return d2
    if d2.n == 0:
        return d1
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else None
    first = d1.entries[edge1:] + d1.entries[:edge1]
    shift = d1.n
    second = tuple(
        GaussEntry(e.crossing_id + shift, e.passage, e.sign)
        for e in d2.entries[edge2:] + d2.entries[:edge2]
    )
    return Diagram(first + second, name)


def _self_paired(entries: tuple[GaussEntry, ...], start: int, length: int) -> bool:
    total = len(entries)
    counts: dict[int, int] = {}
    for offset in range(length):
        cid = entries[(start + offset) % total].crossing_id
        counts[cid] = counts.get(cid, 0) + 1
    return all(c == 2 for c in counts.values())


def is_composite(diagram: Diagram) -> SplitWitness | None:
    """Witness segment of a diagrammatic sum, or None for prime or n<=1.

    Scans segment lengths in increasing order, then start indices, so
    the witness is the shortest segment with the least start.
    """
    entries = diagram.entries
    total = len(entries)
    if diagram.n <= 1:
        return None
    for length in range(2, total - 1, 2):
        for start in range(total):
            if _self_paired(entries, start, length):
                return SplitWitness(start, length)
    return None


def decompose(diagram: Diagram) -> tuple[Diagram, ...]:
    """Split a diagram into prime summands.

    Recursively removes witness segments. Each summand is densely
    renumbered, and summands are ordered by the original position of
    their first retained entry. A prime diagram (or n <= 1) decomposes
    to itself.
    """
    tagged = [(entry, pos) for pos, entry in enumerate(diagram.entries)]

    def split(pairs: list[tuple[GaussEntry, int]]) -> list[list[tuple[GaussEntry, int]]]:
        piece = from_entries([e for e, _ in pairs])
        witness = is_composite(piece)
        if witness is None:
            return [pairs]
        total = len(pairs)
        segment = [pairs[(witness.start + i) % total] for i in range(witness.length)]
        complement = [
            pairs[(witness.start + witness.length + i) % total]
            for i in range(total - witness.length)
        ]
        return split(segment) + split(complement)

    if diagram.n == 0:
        return (diagram,)
    leaves = split(tagged)
    leaves.sort(key=lambda pairs: pairs[0][1])
    name_single = diagram.name if len(leaves) == 1 else None
    return tuple(
        from_entries([e for e, _ in pairs], name_single) for pairs in leaves
    )


@dataclass(frozen=True)
class SumCheck:
    """Outcome of one superadditivity comparison.

    ``holds`` compares lhs >= rhs on the numbers actually computed;
    trust it only when ``conclusive`` is set, which happens when all
    three searches were exact, or when the sum's certified lower bound
    already clears an exactly known rhs.
    """

    lhs: int
    rhs: int
    holds: bool
    conclusive: bool
    sum_outcome: SearchOutcome
    left_outcome: SearchOutcome
    right_outcome: SearchOutcome


@lru_cache(maxsize=4096)
def _omega_by_code(code: str, max_k: int | None, time_limit: float | None) -> SearchOutcome:
    return wirtinger_number(parse_gauss(code), max_k=max_k, time_limit=time_limit)


def superadditivity_check(
    d1: Diagram,
    d2: Diagram,
    *,
    edges: tuple[EdgeRef, EdgeRef] = (0, 0),
    max_k: int | None = None,
    time_limit: float | None = None,
) -> SumCheck:
    """Compare the seed count of a sum against its parts.

    Computes lhs = omega(d1 # d2) and rhs = omega(d1) + omega(d2) - 1
    (searches are memoized by code, so repeated table entries are cheap).
    Timeouts propagate as inconclusive results unless the sum's lower
    bound already certifies the inequality.
    """
    left = _omega_by_code(serialize(d1), max_k, time_limit)
    right = _omega_by_code(serialize(d2), max_k, time_limit)
    summed = connected_sum(d1, d2, edges[0], edges[1])
    total = _omega_by_code(serialize(summed), max_k, time_limit)
    lhs = total.k
    rhs = left.k + right.k - 1
    exact = (
        left.status is SearchStatus.EXACT
        and right.status is SearchStatus.EXACT
    )
    if exact and total.status is SearchStatus.EXACT:
        conclusive = True
    elif exact and total.status is SearchStatus.LOWER_BOUND and lhs >= rhs:
        conclusive = True  # a lower bound on the sum suffices for >=
    else:
        conclusive = False
    return SumCheck(lhs, rhs, lhs >= rhs, conclusive, total, left, right)


def reduce_kinks(diagram: Diagram) -> Diagram:
    """Delete cyclically adjacent same-id entry pairs until none remain.

    Each such pair is a crossing of a strand with itself that borders no
    other crossing, so removing it never breaks the pairing invariant.
    Removal can make new pairs adjacent; the scan restarts until stable.
    The result is densely renumbered and keeps the diagram's name.
    """
    entries = list(diagram.entries)
    changed = True
    while changed and entries:
        changed = False
        total = len(entries)
        for i in range(total):
            j = (i + 1) % total
            if i != j and entries[i].crossing_id == entries[j].crossing_id:
                drop = entries[i].crossing_id
                entries = [e for e in entries if e.crossing_id != drop]
                changed = True
                break
    return from_entries(entries, diagram.name)
