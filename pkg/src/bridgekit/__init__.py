"""Diagrammatic bridge-number invariants of knot diagrams.

The package computes, for any Gauss code: the minimal number of seed
strands whose coloring closure covers the diagram (the Wirtinger
number), the overpass decomposition, and diagrammatic connected sums
and splittings, plus batch tabulation over census files through the
``bridgekit`` command line tool.
"""

from .coloring import (
    Certificate,
    MoveRecord,
    PartialColoring,
    PropagationResult,
    SearchOutcome,
    SearchStatus,
    apply_move,
    certificate_failure,
    certificate_from_json,
    certificate_to_json,
    closure_randomized,
    is_colorable_from,
    propagate,
    seed_coloring,
    verify_certificate,
    wirtinger_number,
    wirtinger_oracle,
)
from .diagram import (
    Crossing,
    Diagram,
    GaussEntry,
    Passage,
    Sign,
    Strand,
    canonical_form,
    crossing_table,
    from_entries,
    parse_gauss,
    rotated,
    serialize,
    strand_table,
)
from .errors import (
    BridgekitError,
    DiagramError,
    DuplicatePassage,
    EdgeOutOfRange,
    EmptyDiagram,
    InternalCheckError,
    MalformedToken,
    MoveNotApplicable,
    OracleBoundExceeded,
    UnknownStrand,
    UnpairedCrossing,
)
from .passes import (
    MinimalityReport,
    PassDecomposition,
    PassRun,
    consecutive_shared_crossings,
    minimality_incompatibility_report,
    overpass_number,
    pass_decomposition,
)
from .sumdecomp import (
    EdgeRef,
    SplitWitness,
    SumCheck,
    connected_sum,
    decompose,
    is_composite,
    reduce_kinks,
    superadditivity_check,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # diagram
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
    # coloring
    "PartialColoring",
    "MoveRecord",
    "Certificate",
    "SearchStatus",
    "SearchOutcome",
    "PropagationResult",
    "seed_coloring",
    "apply_move",
    "propagate",
    "closure_randomized",
    "is_colorable_from",
    "wirtinger_number",
    "wirtinger_oracle",
    "verify_certificate",
    "certificate_failure",
    "certificate_to_json",
    "certificate_from_json",
    # passes
    "PassRun",
    "PassDecomposition",
    "pass_decomposition",
    "overpass_number",
    "consecutive_shared_crossings",
    "MinimalityReport",
    "minimality_incompatibility_report",
    # sums
    "EdgeRef",
    "SplitWitness",
    "SumCheck",
    "connected_sum",
    "is_composite",
    "decompose",
    "superadditivity_check",
    "reduce_kinks",
    # errors
    "BridgekitError",
    "DiagramError",
    "MalformedToken",
    "DuplicatePassage",
    "UnpairedCrossing",
    "EmptyDiagram",
    "UnknownStrand",
    "MoveNotApplicable",
    "OracleBoundExceeded",
    "EdgeOutOfRange",
    "InternalCheckError",
]
