"""Reachability-based, degree-discounted symmetrization of directed graphs."""

from ._reachsym import (
    DirectedGraph,
    Error,
    IoError,
    ParseError,
    UndirectedGraph,
    ValidationError,
    auto_hierarchy,
    bibliometric,
    degree_discounted,
    local_closure,
    sparsify_top_t,
    symmetrize,
)

__all__ = [
    "DirectedGraph",
    "Error",
    "IoError",
    "ParseError",
    "UndirectedGraph",
    "ValidationError",
    "auto_hierarchy",
    "bibliometric",
    "degree_discounted",
    "local_closure",
    "sparsify_top_t",
    "symmetrize",
]
__version__ = "0.1.0"
