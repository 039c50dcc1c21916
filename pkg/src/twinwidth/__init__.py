"""Exact twin-width toolkit for small graphs.

Trigraph contraction semantics, a budgeted exact solver with canonical-form
memoization, replayable certificates, graph6 / edge-list / DOT interchange,
structural bound recognizers, and an isomorphism-free census driver.
"""
from .certificates import (
    ContractionCertificate,
    VerificationResult,
    load_fixture,
    read_certificate,
    record_certificate,
    verify_certificate,
    write_certificate,
)
from .enumeration import (
    CanonicalKey,
    canonical_form,
    canonical_labeling,
    enumerate_graphs,
    enumerate_trees,
    from_canonical_key,
)
from .graphio import (
    GraphFormatError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .solver import (
    CensusRecord,
    CensusResult,
    MemoTable,
    SearchStats,
    SolveResult,
    census_max_tww,
    decide_tww,
    twin_width,
    twin_width_oracle,
)
from .structure import (
    StructuralBound,
    complete,
    complete_bipartite,
    cycle,
    is_caterpillar,
    make_named,
    path,
    recognize,
    spider,
    star,
)
from .trigraph import BLACK, RED, Label, Trigraph, from_graph

__version__ = "0.1.0"

__all__ = [
    "BLACK",
    "RED",
    "CanonicalKey",
    "CensusRecord",
    "CensusResult",
    "ContractionCertificate",
    "GraphFormatError",
    "Label",
    "MemoTable",
    "SearchStats",
    "SolveResult",
    "StructuralBound",
    "Trigraph",
    "VerificationResult",
    "canonical_form",
    "canonical_labeling",
    "census_max_tww",
    "complete",
    "complete_bipartite",
    "cycle",
    "decide_tww",
    "emit_dot",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_graphs",
    "enumerate_trees",
    "from_canonical_key",
    "from_graph",
    "is_caterpillar",
    "load_fixture",
    "make_named",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "read_certificate",
    "recognize",
    "record_certificate",
    "spider",
    "star",
    "twin_width",
    "twin_width_oracle",
    "verify_certificate",
    "write_certificate",
]
