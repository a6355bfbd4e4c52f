"""
Search-graph export: every node of a solve with its classification, for plotting the explored region around
the fastest crossing.
"""

import csv
from pathlib import Path
from typing import Optional, Set, Union

from freeway_oracle.oracle.astar import CrossingSolution
from freeway_oracle.oracle.graph import NodeKey, SearchGraph, path_keys

PathLike = Union[str, Path]

GRAPH_HEADER = ("t", "y", "kind", "on_path")


def write_search_graph(graph: SearchGraph, path: PathLike, solution: Optional[CrossingSolution] = None) -> None:
    """Writes `t,y,kind,on_path` for every node, sorted by (t, y)"""
    on_path: Set[NodeKey] = set(path_keys(graph, solution.terminal)) if solution else set()

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(GRAPH_HEADER)
        for key in sorted(graph.nodes):
            writer.writerow((key.t, key.y, graph[key].kind.value, int(key in on_path)))
