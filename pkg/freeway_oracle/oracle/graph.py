"""
Search graph keyed by (timestep, Y).

Every node stores the single canonical path that first reached it; the node's outgoing edges are always evaluated
from the state at the end of that path. This collapses a history-dependent process onto a (t, y) grid at the price
of exact optimality.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from freeway_oracle.env.actions import Action
from freeway_oracle.env.model import GameState
from freeway_oracle.exceptions import PathReconstructionError


class NodeKind(str, Enum):
    """Classification of a node, as shown in search-graph exports"""

    OPEN = "open"
    CLOSED = "closed"
    COLLISION = "collision"
    TERMINAL = "terminal"


class NodeKey(NamedTuple):
    """(timestep, Y) identity of a node"""

    t: int
    y: int


@dataclass(slots=True)
class NodeRecord:
    """
    A node of the search graph. `parent` and `action_from_parent` are pinned at creation and never change, and
    `cached_state` (when kept) equals the replay of the canonical path to the node.
    """

    key: NodeKey
    g: int
    parent: Optional[NodeKey] = None
    action_from_parent: Optional[Action] = None
    kind: NodeKind = NodeKind.OPEN
    cached_state: Optional[GameState] = None


class SearchGraph:
    """The nodes created during one crossing search"""

    def __init__(self, start: NodeKey, start_state: GameState) -> None:
        self.start = start
        self.nodes: Dict[NodeKey, NodeRecord] = {
            start: NodeRecord(key=start, g=0, cached_state=start_state)
        }

    def __contains__(self, key: object) -> bool:
        return key in self.nodes

    def __getitem__(self, key: NodeKey) -> NodeRecord:
        return self.nodes[key]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[NodeRecord]:
        return iter(self.nodes.values())

    @property
    def start_record(self) -> NodeRecord:
        """Record of the start node"""
        return self.nodes[self.start]

    def create(
        self,
        key: NodeKey,
        parent: NodeRecord,
        action: Action,
        kind: NodeKind,
        state: Optional[GameState],
    ) -> Optional[NodeRecord]:
        """Creates a node pinned to `parent`. Returns None if the key already exists, leaving that node untouched"""
        if key in self.nodes:
            return None

        record = NodeRecord(
            key=key,
            g=parent.g + 1,
            parent=parent.key,
            action_from_parent=action,
            kind=kind,
            cached_state=state,
        )
        self.nodes[key] = record
        return record

    def edges(self) -> Iterator[Tuple[NodeRecord, NodeRecord]]:
        """(parent, child) pairs of every canonical edge"""
        for record in self.nodes.values():
            if record.parent is not None:
                yield self.nodes[record.parent], record

    def count(self, kind: NodeKind) -> int:
        """Number of nodes of a kind"""
        return sum(1 for record in self.nodes.values() if record.kind is kind)


def reconstruct_path(graph: SearchGraph, terminal: NodeKey) -> List[Action]:
    """Follows the pinned back edges from `terminal` to the start node and returns the actions in forward order"""
    if terminal not in graph:
        raise PathReconstructionError(f"node {terminal} is not in the graph")

    actions: List[Action] = []
    record = graph[terminal]

    while record.key != graph.start:
        if record.parent is None or record.action_from_parent is None:
            raise PathReconstructionError(f"node {record.key} has no parent but is not the start node")
        if record.parent not in graph or len(actions) >= len(graph):
            raise PathReconstructionError(f"broken parent chain at {record.key}")

        actions.append(record.action_from_parent)
        record = graph[record.parent]

    actions.reverse()

    expected = graph[terminal].g - graph.start_record.g
    if len(actions) != expected:
        raise PathReconstructionError(f"path to {terminal} has {len(actions)} actions, expected {expected}")

    return actions


def path_keys(graph: SearchGraph, terminal: NodeKey) -> List[NodeKey]:
    """Keys on the canonical path from the start node to `terminal`, in forward order"""
    keys = [terminal]
    record = graph[terminal]
    while record.parent is not None and len(keys) <= len(graph):
        keys.append(record.parent)
        record = graph[record.parent]
    if keys[-1] != graph.start:
        raise PathReconstructionError(f"broken parent chain below {terminal}")
    keys.reverse()
    return keys
