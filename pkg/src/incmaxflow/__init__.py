"""Incremental approximate s-t max flow via NI-index residual sampling."""

from .graph import Arc, Direction, FlowState, PathError, UndirectedMultiGraph
from .incflow import FlowConfig, IncrementalMaxFlow, sample_budget
from .nipacking import ForestPacking
from .reachability import ReachTree
from .sampler import CumulativeIndex, NISampler
from .unionfind import DisjointSets

__all__ = [
    "Arc",
    "CumulativeIndex",
    "Direction",
    "DisjointSets",
    "FlowConfig",
    "FlowState",
    "ForestPacking",
    "IncrementalMaxFlow",
    "NISampler",
    "PathError",
    "ReachTree",
    "UndirectedMultiGraph",
    "sample_budget",
]
