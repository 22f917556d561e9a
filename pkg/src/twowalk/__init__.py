"""Constructive 2-walks in 2-tough 2K2-free graphs."""

from .graph import EdgeClass, Graph, MultiGraph, Walk, parse_graph, serialize_graph
from .pipeline import WalkResult, two_walk

__all__ = [
    "EdgeClass",
    "Graph",
    "MultiGraph",
    "Walk",
    "WalkResult",
    "parse_graph",
    "serialize_graph",
    "two_walk",
]
