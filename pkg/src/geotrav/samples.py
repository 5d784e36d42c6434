"""Small fixed instances used by tests, docs and the CLI."""
from __future__ import annotations

from .geograph import GeometricGraph, graph_from_edges

# Six vertices drawn so that, around vertex 0, the neighbours come in the
# order 1, 2, 3 counterclockwise from +x, and around vertex 2 the walk from 0
# meets 4 before 5. No unit-disk drawing has this rotation system, hence the
# explicit edge list.
SIX_VERTEX_POINTS = [("0.5", "0.5"), ("2.5", "1.5"), ("1.5", "2.5"), ("-0.5", "1.5"), ("2.5", "3.5"), ("0.5", "3.5")]
SIX_VERTEX_EDGES = [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5), (3, 4)]

# 12 states of the k = 2 walk from vertex 0, as (pebbled path, arc, mode)
SIX_VERTEX_TRACE = [
    ((0, 1), (0, 1), "fw"),
    ((0,), (1, 0), "bw"),
    ((0, 2), (0, 2), "fw"),
    ((0, 2, 4), (2, 4), "fw"),
    ((0, 2), (4, 2), "bw"),
    ((0, 2, 5), (2, 5), "fw"),
    ((0, 2), (5, 2), "bw"),
    ((0,), (2, 0), "bw"),
    ((0, 3), (0, 3), "fw"),
    ((0, 3, 4), (3, 4), "fw"),
    ((0, 3), (4, 3), "bw"),
    ((0,), (3, 0), "bw"),
]


def six_vertex_graph() -> GeometricGraph:
    return graph_from_edges(SIX_VERTEX_POINTS, SIX_VERTEX_EDGES)
