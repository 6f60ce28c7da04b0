"""Strand colorings, the coloring move, and the minimal seed search.

A partial coloring assigns positive integer colors to some strands. The
one extension rule: at a crossing whose over-strand is already colored,
a colored strand of the under pair hands its color to the uncolored one.
Repeating the rule until it stalls gives a closure whose colored SET does
not depend on the order moves are applied in, which is what makes the
minimal seed count below well defined.

``wirtinger_number`` returns the least k for which some k seed strands
close to the whole diagram. It searches k = 1, 2, ... in order; within a
level it runs a stall-based depth-first search that starts one branch per
first seed, extends a stalled closure by each currently uncolored strand
in ascending id order, and memoizes visited closure sets to prune repeats.
Results are schedule independent: the parallel mode splits first-seed
branches across processes and keeps the branch whose first seed is
smallest, which is the same certificate the sequential order finds.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .diagram import Diagram, parse_gauss, serialize
from .errors import MoveNotApplicable, OracleBoundExceeded, UnknownStrand

__all__ = [
    "PartialColoring",
    "MoveRecord",
    "Certificate",
    "SearchStatus",
    "SearchOutcome",
    "seed_coloring",
    "apply_move",
    "propagate",
    "PropagationResult",
    "closure_randomized",
    "is_colorable_from",
    "wirtinger_number",
    "wirtinger_oracle",
    "verify_certificate",
    "certificate_failure",
    "certificate_to_json",
    "certificate_from_json",
]


@dataclass(frozen=True)
class PartialColoring:
    """An assignment of colors to a subset of strands. Treat as immutable."""

    color: Mapping[int, int]

    @property
    def colored(self) -> frozenset[int]:
        return frozenset(self.color)

    def get(self, strand_id: int) -> int | None:
        return self.color.get(strand_id)


@dataclass(frozen=True)
class MoveRecord:
    crossing_id: int
    source_strand: int
    target_strand: int
    over_strand: int
    assigned_color: int


@dataclass(frozen=True)
class Certificate:
    """A replayable witness that k seeds color the whole diagram."""

    k: int
    seeds: tuple[int, ...]
    trace: tuple[MoveRecord, ...]


class SearchStatus(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    k: int
    certificate: Certificate | None
    elapsed: float
    nodes_explored: int


class PropagationResult(NamedTuple):
    colored: frozenset[int]
    coloring: dict[int, int]
    trace: tuple[MoveRecord, ...]


def _check_strands(diagram: Diagram, ids: Iterable[int]) -> None:
    m = diagram.n_strands
    for s in ids:
        if not 1 <= s <= m:
            raise UnknownStrand(s, m)


def seed_coloring(diagram: Diagram, seeds: Iterable[int]) -> PartialColoring:
    """Color the seed strands 1..k in ascending strand id order."""
    ordered = sorted(set(seeds))
    _check_strands(diagram, ordered)
    return PartialColoring({s: i for i, s in enumerate(ordered, start=1)})


def apply_move(
    diagram: Diagram,
    coloring: PartialColoring,
    crossing_id: int,
    target_strand: int,
) -> PartialColoring:
    """Apply one coloring move, extending the coloring to ``target_strand``.

    The move is legal when the target is uncolored, sits in the under
    pair of the named crossing opposite a colored source strand, and the
    crossing's over-strand is colored. The target receives the source's
    color. Raises MoveNotApplicable citing the first failed condition,
    or UnknownStrand for an id outside the strand table.
    """
    _check_strands(diagram, (target_strand,))
    if not 1 <= crossing_id <= diagram.n:
        raise MoveNotApplicable(3, f"crossing {crossing_id} is not in the diagram")
    color = coloring.color
    if target_strand in color:
        raise MoveNotApplicable(1, f"strand {target_strand} is already colored")
    crossing = diagram.crossings[crossing_id - 1]
    a, b = crossing.under_pair
    if target_strand == a:
        source = b
    elif target_strand == b:
        source = a
    else:
        raise MoveNotApplicable(
            3, f"strand {target_strand} is not in the under pair of crossing {crossing_id}"
        )
    if source not in color:
        raise MoveNotApplicable(
            3, f"source strand {source} at crossing {crossing_id} is not colored"
        )
    if crossing.over_strand not in color:
        raise MoveNotApplicable(
            4, f"over-strand {crossing.over_strand} at crossing {crossing_id} is not colored"
        )
    extended = dict(color)
    extended[target_strand] = color[source]
    return PartialColoring(extended)


def propagate(diagram: Diagram, seeds: Iterable[int]) -> PropagationResult:
    """Run coloring moves to closure, deterministically.

    Seeds get colors 1..k in ascending strand id order. While any move
    applies, the one with the lexicographically least (target, crossing,
    source) triple is taken, so the trace is reproducible run to run.
    The returned colored set is the same for every order; only the trace
    depends on this tie-break.
    """
    start = seed_coloring(diagram, seeds)
    color = dict(start.color)
    trace: list[MoveRecord] = []
    crossings = diagram.crossings
    while True:
        best: tuple[int, int, int] | None = None
        over_of_best = 0
        for crossing in crossings:
            if crossing.over_strand not in color:
                continue
            a, b = crossing.under_pair
            for source, target in ((a, b), (b, a)):
                if source in color and target not in color:
                    cand = (target, crossing.crossing_id, source)
                    if best is None or cand < best:
                        best = cand
                        over_of_best = crossing.over_strand
        if best is None:
            break
        target, cid, source = best
        color[target] = color[source]
        trace.append(MoveRecord(cid, source, target, over_of_best, color[target]))
    return PropagationResult(frozenset(color), color, tuple(trace))


def closure_randomized(diagram: Diagram, seeds: Iterable[int], rng) -> frozenset[int]:
    """Closure computed with an rng-shuffled move order.

    Exists to exercise order independence of the colored set; everything
    else in the package uses the deterministic schedules.
    """
    start = seed_coloring(diagram, seeds)
    colored = set(start.color)
    crossings = list(diagram.crossings)
    while True:
        applicable = []
        for crossing in crossings:
            if crossing.over_strand not in colored:
                continue
            a, b = crossing.under_pair
            if a in colored and b not in colored:
                applicable.append(b)
            if b in colored and a not in colored:
                applicable.append(a)
        if not applicable:
            return frozenset(colored)
        colored.add(rng.choice(applicable))


# ── fast closure machinery ──────────────────────────────────────────────

# Strands are bits; each strand points at the crossings it touches, and a
# crossing fires when its over bit and exactly one under bit are set.


@lru_cache(maxsize=256)
def _engine(diagram: Diagram) -> tuple[tuple[tuple[tuple[int, int, int, int, int], ...], ...], int, int]:
    m = diagram.n_strands
    full = (1 << m) - 1
    triggers: list[list[tuple[int, int, int, int, int]]] = [[] for _ in range(m + 1)]
    for crossing in diagram.crossings:
        a, b = crossing.under_pair
        o = crossing.over_strand
        rec = (1 << (o - 1), 1 << (a - 1), 1 << (b - 1), a, b)
        for s in {o, a, b}:
            triggers[s].append(rec)
    return tuple(tuple(t) for t in triggers), full, m


def _close(
    triggers: tuple[tuple[tuple[int, int, int, int, int], ...], ...],
    colored: int,
    fresh: list[int],
) -> int:
    stack = fresh
    while stack:
        s = stack.pop()
        for o_bit, a_bit, b_bit, a, b in triggers[s]:
            if colored & o_bit:
                has_a = colored & a_bit
                has_b = colored & b_bit
                if has_a and not has_b:
                    colored |= b_bit
                    stack.append(b)
                elif has_b and not has_a:
                    colored |= a_bit
                    stack.append(a)
    return colored


def is_colorable_from(diagram: Diagram, seeds: Iterable[int]) -> bool:
    """True when the closure of the seed set colors every strand."""
    ordered = sorted(set(seeds))
    _check_strands(diagram, ordered)
    triggers, full, _ = _engine(diagram)
    mask = 0
    for s in ordered:
        mask |= 1 << (s - 1)
    return _close(triggers, mask, list(ordered)) == full


_DEADLINE_STRIDE = 512


class _LevelTimeout(Exception):
    pass


def _search_level(
    triggers,
    full: int,
    m: int,
    k: int,
    roots: Iterable[int],
    deadline: float | None,
) -> tuple[tuple[int, ...] | None, int, bool]:
    """One k level of the seed search over the given first-seed branches.

    Returns (seed tuple or None, closures computed, timed out). The seed
    tuple, when found, is the first success in depth-first order with
    branches taken in ascending strand id.
    """
    visited: dict[int, int] = {}
    nodes = 0

    def out_of_time() -> bool:
        return deadline is not None and time.monotonic() > deadline

    for first in roots:
        root = _close(triggers, 1 << (first - 1), [first])
        nodes += 1
        if root == full:
            return (first,), nodes, False
        if k == 1:
            continue
        prev = visited.get(root)
        if prev is not None and prev <= 1:
            continue
        visited[root] = 1
        stack: list[tuple[int, tuple[int, ...]]] = [(root, (first,))]
        while stack:
            colored, seeds = stack.pop()
            if visited.get(colored, k) < len(seeds):
                continue  # re-reached more cheaply elsewhere, stale entry
            depth = len(seeds) + 1
            children = []
            remaining = ~colored & full
            t = 1
            rem = remaining
            while rem:
                if rem & 1:
                    new = _close(triggers, colored | (1 << (t - 1)), [t])
                    nodes += 1
                    if new == full:
                        return seeds + (t,), nodes, False
                    if depth < k:
                        prev = visited.get(new)
                        if prev is None or prev > depth:
                            visited[new] = depth
                            children.append((new, seeds + (t,)))
                    if nodes % _DEADLINE_STRIDE == 0 and out_of_time():
                        return None, nodes, True
                rem >>= 1
                t += 1
            stack.extend(reversed(children))
        if out_of_time():
            return None, nodes, True
    return None, nodes, False


def _level_worker(code: str, k: int, root: int, budget: float | None):
    diagram = parse_gauss(code)
    triggers, full, m = _engine(diagram)
    deadline = time.monotonic() + budget if budget is not None else None
    seeds, nodes, timed_out = _search_level(triggers, full, m, k, [root], deadline)
    return root, seeds, nodes, timed_out


def _build_certificate(diagram: Diagram, seeds: tuple[int, ...]) -> Certificate:
    ordered = tuple(sorted(seeds))
    colored, _, trace = propagate(diagram, ordered)
    if len(colored) != diagram.n_strands:
        raise AssertionError("search returned seeds whose closure is incomplete")
    return Certificate(len(ordered), ordered, trace)


def wirtinger_number(
    diagram: Diagram,
    *,
    max_k: int | None = None,
    time_limit: float | None = None,
    parallel: int = 1,
) -> SearchOutcome:
    """Least number of seed strands whose closure colors the diagram.

    Tries k = 1, 2, ... up to ``max_k`` (default: the strand count, which
    always suffices). On success the outcome is exact and carries a
    replayable certificate. If the wall-clock ``time_limit`` (seconds)
    expires, or every k up to ``max_k`` is exhausted, the outcome is a
    certified lower bound: k is the largest level fully proven
    insufficient, plus one.

    ``parallel`` > 1 distributes first-seed branches of each level over
    that many worker processes. The reported k and certificate match the
    sequential search; only elapsed time and node counts vary.
    """
    start = time.monotonic()
    deadline = start + time_limit if time_limit is not None else None
    triggers, full, m = _engine(diagram)
    cap = m if max_k is None else max(1, min(max_k, m))
    total_nodes = 0
    code = serialize(diagram) if parallel > 1 else ""
    for k in range(1, cap + 1):
        if deadline is not None and time.monotonic() > deadline:
            return SearchOutcome(
                SearchStatus.LOWER_BOUND, k, None, time.monotonic() - start, total_nodes
            )
        if parallel > 1 and m > 1:
            budget = None if deadline is None else max(deadline - time.monotonic(), 0.01)
            found: tuple[int, tuple[int, ...]] | None = None
            timed_out = False
            with ProcessPoolExecutor(max_workers=parallel) as pool:
                futures = [
                    pool.submit(_level_worker, code, k, root, budget)
                    for root in range(1, m + 1)
                ]
                for fut in futures:
                    root, seeds, nodes, branch_timeout = fut.result()
                    total_nodes += nodes
                    timed_out = timed_out or branch_timeout
                    if seeds is not None and (found is None or root < found[0]):
                        found = (root, seeds)
            if found is not None:
                cert = _build_certificate(diagram, found[1])
                return SearchOutcome(
                    SearchStatus.EXACT, k, cert, time.monotonic() - start, total_nodes
                )
            if timed_out:
                return SearchOutcome(
                    SearchStatus.LOWER_BOUND, k, None, time.monotonic() - start, total_nodes
                )
        else:
            seeds, nodes, timed_out = _search_level(
                triggers, full, m, k, range(1, m + 1), deadline
            )
            total_nodes += nodes
            if seeds is not None:
                cert = _build_certificate(diagram, seeds)
                return SearchOutcome(
                    SearchStatus.EXACT, k, cert, time.monotonic() - start, total_nodes
                )
            if timed_out:
                return SearchOutcome(
                    SearchStatus.LOWER_BOUND, k, None, time.monotonic() - start, total_nodes
                )
    return SearchOutcome(
        SearchStatus.LOWER_BOUND, cap + 1, None, time.monotonic() - start, total_nodes
    )


# ── brute-force oracle ──────────────────────────────────────────────────


def _naive_closure(diagram: Diagram, seeds: Iterable[int]) -> set[int]:
    # Deliberately re-derived from the move definition with full rescans,
    # sharing nothing with the bitmask engine, so the two can cross-check.
    colored = set(seeds)
    changed = True
    while changed:
        changed = False
        for crossing in diagram.crossings:
            if crossing.over_strand not in colored:
                continue
            a, b = crossing.under_pair
            if a in colored and b not in colored:
                colored.add(b)
                changed = True
            if b in colored and a not in colored:
                colored.add(a)
                changed = True
    return colored


def wirtinger_oracle(diagram: Diagram, bound: int = 10) -> int:
    """Exhaustive reference computation of the minimal seed count.

    Tries every seed subset in increasing size with no pruning or
    memoization. Refuses diagrams with more than ``bound`` crossings
    (default 10) since the subset space explodes.
    """
    if diagram.n > bound:
        raise OracleBoundExceeded(diagram.n, bound)
    m = diagram.n_strands
    for k in range(1, m + 1):
        for subset in itertools.combinations(range(1, m + 1), k):
            if len(_naive_closure(diagram, subset)) == m:
                return k
    raise AssertionError("seeding every strand must color the diagram")


# ── certificates ────────────────────────────────────────────────────────


def certificate_failure(diagram: Diagram, certificate: Certificate) -> str | None:
    """Replay a certificate; None when valid, else the first failure."""
    seeds = certificate.seeds
    m = diagram.n_strands
    if certificate.k != len(seeds):
        return f"k={certificate.k} but {len(seeds)} seeds are listed"
    if len(set(seeds)) != len(seeds):
        return "seed strands are not distinct"
    for s in seeds:
        if not 1 <= s <= m:
            return f"seed strand {s} not in 1..{m}"
    coloring = PartialColoring({s: i for i, s in enumerate(seeds, start=1)})
    for step, rec in enumerate(certificate.trace, start=1):
        if not 1 <= rec.target_strand <= m:
            return f"step {step}: target strand {rec.target_strand} not in 1..{m}"
        try:
            extended = apply_move(diagram, coloring, rec.crossing_id, rec.target_strand)
        except MoveNotApplicable as exc:
            return f"step {step}: {exc}"
        crossing = diagram.crossings[rec.crossing_id - 1]
        a, b = crossing.under_pair
        actual_source = a if rec.target_strand == b else b
        if rec.source_strand != actual_source:
            return (
                f"step {step}: recorded source {rec.source_strand} is not the strand "
                f"opposite the target at crossing {rec.crossing_id}"
            )
        if rec.over_strand != crossing.over_strand:
            return (
                f"step {step}: recorded over-strand {rec.over_strand} is not the "
                f"over-strand of crossing {rec.crossing_id}"
            )
        if extended.color[rec.target_strand] != rec.assigned_color:
            return (
                f"step {step}: condition 5 failed: assigned color {rec.assigned_color} "
                f"differs from the source strand's color"
            )
        coloring = extended
    if len(coloring.color) != m:
        missing = sorted(set(range(1, m + 1)) - set(coloring.color))
        return f"trace ends with strands {missing} uncolored"
    return None


def verify_certificate(diagram: Diagram, certificate: Certificate) -> bool:
    """True iff replaying seeds then trace colors every strand exactly once."""
    return certificate_failure(diagram, certificate) is None


def certificate_to_json(certificate: Certificate) -> str:
    payload = {
        "k": certificate.k,
        "seeds": list(certificate.seeds),
        "trace": [
            {
                "crossing": rec.crossing_id,
                "source": rec.source_strand,
                "target": rec.target_strand,
                "over": rec.over_strand,
                "color": rec.assigned_color,
            }
            for rec in certificate.trace
        ],
    }
    return json.dumps(payload)


def certificate_from_json(text: str) -> Certificate:
    payload = json.loads(text)
    trace = tuple(
        MoveRecord(
            crossing_id=rec["crossing"],
            source_strand=rec["source"],
            target_strand=rec["target"],
            over_strand=rec["over"],
            assigned_color=rec["color"],
        )
        for rec in payload["trace"]
    )
    return Certificate(k=payload["k"], seeds=tuple(payload["seeds"]), trace=trace)
