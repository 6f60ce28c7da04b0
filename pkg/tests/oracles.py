"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive: different algorithms and data
representations than the library, so agreement is meaningful.
"""

from __future__ import annotations

import random
from collections import Counter

from bridgekit import Diagram, GaussEntry, Passage


def random_valid_code(rng: random.Random, n: int) -> str:
    """Random double-occurrence word: each of the ids 1..n appears once
    as O and once as U at uniformly random positions."""
    slots: list[tuple[int, str] | None] = [None] * (2 * n)
    order = list(range(2 * n))
    rng.shuffle(order)
    for i in range(n):
        a, b = order[2 * i], order[2 * i + 1]
        if rng.random() < 0.5:
            a, b = b, a
        slots[a] = (i + 1, "O")
        slots[b] = (i + 1, "U")
    return "".join(f"{kind}{cid}" for cid, kind in slots)  # type: ignore[misc]


def naive_pass_kinds(diagram: Diagram) -> list[str]:
    """Kinds of the maximal same-passage runs, computed by plain string
    grouping on the rotated entry sequence."""
    letters = "".join(e.passage.value for e in diagram.entries)
    if not letters:
        return []
    # step back to the start of the run containing position 0
    total = len(letters)
    j = 0
    while j > -total and letters[(j - 1) % total] == letters[j % total]:
        j -= 1
    if j == -total:  # single run around the whole circle
        return [letters[0]]
    start = j % total
    rotated = letters[start:] + letters[:start]
    kinds: list[str] = []
    for ch in rotated:
        if not kinds or kinds[-1] != ch:
            kinds.append(ch)
    return kinds


def naive_split_witnesses(diagram: Diagram) -> list[tuple[int, int]]:
    """All (start, length) pairs marking a proper, nonempty cyclic
    segment in which every crossing id occurs exactly twice."""
    entries = diagram.entries
    total = len(entries)
    out = []
    for start in range(total):
        for length in range(2, total, 2):
            segment = [entries[(start + i) % total] for i in range(length)]
            counts = Counter(e.crossing_id for e in segment)
            if all(v == 2 for v in counts.values()):
                out.append((start, length))
    return out


def naive_closure(diagram: Diagram, seeds) -> frozenset[int]:
    """Fixed-point of the coloring move computed by full rescans over a
    plain set, with crossings consulted in arbitrary (set) order."""
    colored = set(seeds)
    changed = True
    while changed:
        changed = False
        for c in diagram.crossings:
            if c.over_strand not in colored:
                continue
            a, b = c.under_pair
            for src, dst in ((a, b), (b, a)):
                if src in colored and dst not in colored:
                    colored.add(dst)
                    changed = True
    return frozenset(colored)
