"""Vertex-minor toolkit."""

from .graph import Graph, GraphError, MutableGraph, compact, delete_vertices, induced_subgraph, local_complement, pivot
from .trace import LC, Delete, OpTrace, Pivot, ReplayError, replay

__all__ = [
    "Delete",
    "Graph",
    "GraphError",
    "LC",
    "MutableGraph",
    "OpTrace",
    "Pivot",
    "ReplayError",
    "compact",
    "delete_vertices",
    "induced_subgraph",
    "local_complement",
    "pivot",
    "replay",
]
