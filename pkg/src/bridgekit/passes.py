"""Overpass and underpass structure of a Gauss code.

Cutting the cyclic entry sequence at every change between over and under
passages yields the maximal runs: alternating stretches that the curve
travels entirely on top or entirely underneath. The number of over runs
is the diagram's overpass count, which is also the minimum number of
overpasses over all ways of cutting the curve into alternating passes
(passes through crossing-free arcs are allowed but never help).

Crossings shared between cyclically adjacent runs separate two kinds of
minimality: a diagram that minimizes the overpass count for its knot
needs every adjacent run pair to share a crossing, while a diagram that
minimizes the crossing number shares none. The report below exposes both
necessary conditions; for any diagram with at least one crossing they
cannot hold simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, Passage

__all__ = [
    "PassRun",
    "PassDecomposition",
    "pass_decomposition",
    "overpass_number",
    "consecutive_shared_crossings",
    "MinimalityReport",
    "minimality_incompatibility_report",
]


@dataclass(frozen=True)
class PassRun:
    kind: Passage
    crossing_ids: tuple[int, ...]


@dataclass(frozen=True)
class PassDecomposition:
    """Maximal same-passage runs, in cyclic order.

    The listing starts with the run containing entry index 0 (including
    any head that wraps past the end of the stored sequence).
    """

    runs: tuple[PassRun, ...]

    @property
    def overpass_count(self) -> int:
        return sum(1 for r in self.runs if r.kind is Passage.OVER)

    @property
    def underpass_count(self) -> int:
        return sum(1 for r in self.runs if r.kind is Passage.UNDER)


def pass_decomposition(diagram: Diagram) -> PassDecomposition:
    entries = diagram.entries
    total = len(entries)
    if total == 0:
        return PassDecomposition(())
    # Back up to the first entry of the run containing index 0. A code
    # with n >= 1 always has both passage kinds, so this terminates.
    start = 0
    while entries[(start - 1) % total].passage is entries[start].passage:
        start = (start - 1) % total
        if start == 0:
            break
    runs: list[PassRun] = []
    i = start
    consumed = 0
    while consumed < total:
        kind = entries[i].passage
        ids: list[int] = []
        while consumed < total and entries[i].passage is kind:
            ids.append(entries[i].crossing_id)
            i = (i + 1) % total
            consumed += 1
        runs.append(PassRun(kind, tuple(ids)))
    return PassDecomposition(tuple(runs))


def overpass_number(diagram: Diagram) -> int:
    """Number of overpasses in the maximal-run decomposition (1 for n=0)."""
    if diagram.n == 0:
        return 1
    return pass_decomposition(diagram).overpass_count


def consecutive_shared_crossings(diagram: Diagram) -> tuple[tuple[int, int], ...]:
    """Crossings shared by cyclically adjacent runs.

    Returns (boundary index, crossing id) pairs, where boundary i sits
    between runs[i] and runs[i+1] (wrapping), sorted by boundary then id.
    A two-run code reports each shared crossing at both boundaries.
    """
    runs = pass_decomposition(diagram).runs
    r = len(runs)
    out: list[tuple[int, int]] = []
    for i in range(r):
        shared = set(runs[i].crossing_ids) & set(runs[(i + 1) % r].crossing_ids)
        out.extend((i, cid) for cid in sorted(shared))
    return tuple(out)


@dataclass(frozen=True)
class MinimalityReport:
    overpass_minimal_necessary_condition: bool
    crossing_minimal_necessary_condition: bool


def minimality_incompatibility_report(diagram: Diagram) -> MinimalityReport:
    """Evaluate both sharing conditions on adjacent run pairs.

    ``overpass_minimal_necessary_condition``: every cyclically adjacent
    run pair shares at least one crossing. ``crossing_minimal_necessary_
    condition``: no adjacent pair shares any. With n >= 1 at least one
    boundary exists, so at most one flag is true; the 0-crossing diagram
    satisfies both vacuously.
    """
    runs = pass_decomposition(diagram).runs
    r = len(runs)
    if r == 0:
        return MinimalityReport(True, True)
    shares = [
        bool(set(runs[i].crossing_ids) & set(runs[(i + 1) % r].crossing_ids))
        for i in range(r)
    ]
    return MinimalityReport(all(shares), not any(shares))
