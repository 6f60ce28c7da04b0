"""Exception types shared across the package."""

from __future__ import annotations


class BridgekitError(Exception):
    """Base class for all errors raised by this package."""


class DiagramError(BridgekitError):
    """A Gauss code or diagram operation was given invalid input."""


class MalformedToken(DiagramError):
    """An entry did not match the O/U + integer + optional sign grammar."""

    def __init__(self, token: str, position: int):
        self.token = token
        self.position = position
        super().__init__(f"malformed entry {token!r} at position {position}")


class DuplicatePassage(DiagramError):
    """A crossing id occurred twice with the same passage kind."""

    def __init__(self, crossing_id: int, passage: str):
        self.crossing_id = crossing_id
        self.passage = passage
        super().__init__(
            f"crossing {crossing_id} has two {passage!r} passages, expected one over and one under"
        )


class UnpairedCrossing(DiagramError):
    """A crossing id did not occur exactly twice."""

    def __init__(self, crossing_id: int, count: int):
        self.crossing_id = crossing_id
        self.count = count
        super().__init__(f"crossing {crossing_id} occurs {count} time(s), expected exactly 2")


class EmptyDiagram(DiagramError):
    """An operation that needs at least one crossing was given none."""


class UnknownStrand(DiagramError):
    """A strand id outside the diagram's strand table was referenced."""

    def __init__(self, strand_id: int, n_strands: int):
        self.strand_id = strand_id
        self.n_strands = n_strands
        super().__init__(f"strand {strand_id} not in 1..{n_strands}")


class MoveNotApplicable(BridgekitError):
    """A coloring move failed one of its five applicability conditions.

    ``condition`` is the number of the first condition that failed:

    1. the target strand is already colored (the move must color exactly
       one new strand),
    2. the move would change a previously assigned color,
    3. the target is not adjacent to a colored source strand at the given
       crossing,
    4. the over-strand at the crossing is not colored,
    5. the assigned color differs from the source strand's color.
    """

    def __init__(self, condition: int, detail: str):
        self.condition = condition
        self.detail = detail
        super().__init__(f"condition {condition} failed: {detail}")


class OracleBoundExceeded(BridgekitError):
    """The brute-force oracle was asked to search beyond its size bound."""

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"oracle limited to {bound} crossings, got {n}")


class EdgeOutOfRange(DiagramError):
    """An edge position outside 0..2n-1 was referenced."""

    def __init__(self, position: int, n_entries: int):
        self.position = position
        self.n_entries = n_entries
        super().__init__(f"edge position {position} not in 0..{max(n_entries - 1, 0)}")


class InternalCheckError(BridgekitError):
    """A redundant internal consistency check failed (e.g. oracle mismatch)."""
