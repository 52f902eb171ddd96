"""Locating-dominating sets and identifying codes on graphs of girth at least 5."""

from __future__ import annotations

from .codes import (
    Verdict,
    Violation,
    dominates,
    is_id_girth5,
    is_identifying_code,
    is_ld_girth5,
    is_locating_dominating,
)
from .constructions import (
    ConstructionResult,
    id_five_sevenths,
    id_from_cover,
    ld_from_cover,
    ld_half,
    verify_or_repair,
)
from .errors import GraphFormatError, HypothesisError, InvalidCoverError, NotIdentifiableError
from .exact import SolveResult, min_dominating, min_identifying_code, min_locating_dominating
from .graph import Graph, girth
from .graph6 import encode_graph6, parse_graph6
from .pathcover import PathCover, greedy_cover, normalize_id, normalize_ld

__version__ = "0.1.0"

__all__ = [
    "ConstructionResult",
    "Graph",
    "GraphFormatError",
    "HypothesisError",
    "InvalidCoverError",
    "NotIdentifiableError",
    "PathCover",
    "SolveResult",
    "Verdict",
    "Violation",
    "dominates",
    "encode_graph6",
    "girth",
    "greedy_cover",
    "id_five_sevenths",
    "id_from_cover",
    "is_id_girth5",
    "is_identifying_code",
    "is_ld_girth5",
    "is_locating_dominating",
    "ld_from_cover",
    "ld_half",
    "min_dominating",
    "min_identifying_code",
    "min_locating_dominating",
    "normalize_id",
    "normalize_ld",
    "parse_graph6",
    "verify_or_repair",
]
