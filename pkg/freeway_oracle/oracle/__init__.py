"""
A-Star crossing oracle
"""

from freeway_oracle.oracle.astar import CrossingSearch, CrossingSolution, heuristic, solve_crossing
from freeway_oracle.oracle.graph import NodeKey, NodeKind, NodeRecord, SearchGraph, path_keys, reconstruct_path

__all__ = [
    "CrossingSearch",
    "CrossingSolution",
    "NodeKey",
    "NodeKind",
    "NodeRecord",
    "SearchGraph",
    "path_keys",
    "heuristic",
    "reconstruct_path",
    "solve_crossing",
]
