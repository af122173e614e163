"""Strong colorings of intersecting hypergraphs.

Constructive 3-strong 5-colorings of 2-intersecting hypergraphs, t-strong
(t+1)-colorings of families with property P_t, an exact backtracking oracle
and seeded instance generators.
"""

from strongcolor.setfam import (
    Hypergraph,
    Triple,
    find_min_union_empty_triple,
    has_property_pt,
    is_t_intersecting,
    minimal_edges,
    private_parts,
)
from strongcolor.coloring import (
    ColoringReport,
    LabeledTriple,
    Trace,
    case3_detect_swap,
    color_X,
    greedy_outside_case1,
    lemma_coloring,
    relabel_triple,
    theorem_coloring,
    verify_strong,
)
from strongcolor.errors import (
    BudgetExhausted,
    GenerationError,
    InternalVerificationError,
    OracleSizeError,
    ParseError,
    PreconditionError,
)
from strongcolor.oracle import OracleResult, oracle_exists_coloring, oracle_min_colors

__all__ = [
    "BudgetExhausted",
    "ColoringReport",
    "GenerationError",
    "Hypergraph",
    "InternalVerificationError",
    "LabeledTriple",
    "OracleResult",
    "OracleSizeError",
    "ParseError",
    "PreconditionError",
    "Trace",
    "Triple",
    "case3_detect_swap",
    "color_X",
    "find_min_union_empty_triple",
    "greedy_outside_case1",
    "has_property_pt",
    "is_t_intersecting",
    "lemma_coloring",
    "minimal_edges",
    "oracle_exists_coloring",
    "oracle_min_colors",
    "private_parts",
    "relabel_triple",
    "theorem_coloring",
    "verify_strong",
]
