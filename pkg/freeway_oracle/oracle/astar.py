"""
A-Star oracle for a single road crossing.

Edges have unit cost (one timestep), so g of a node is its timestep minus the start timestep. The heuristic assumes
the chicken climbs `step_max` units every step without a collision, which never overestimates and is consistent.
Frontier order is f, then larger g, then insertion order.
"""

import heapq
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from freeway_oracle.env.actions import EXPANSION_ORDER, Action
from freeway_oracle.env.config import GameConfig, SearchConfig
from freeway_oracle.env.model import GameState, StepResult, game_length, replay, replay_from, step
from freeway_oracle.exceptions import GameOverError, NoPathError, UsageError
from freeway_oracle.logger import log_duration
from freeway_oracle.oracle.graph import NodeKey, NodeKind, NodeRecord, SearchGraph, reconstruct_path

logger = logging.getLogger(__name__)

FrontierEntry = Tuple[int, int, int, NodeKey]


@dataclass(frozen=True, slots=True)
class CrossingSolution:
    """Fastest crossing found from `start`, with the search effort it took"""

    start: NodeKey
    terminal: NodeKey
    actions: Tuple[Action, ...]
    nodes_expanded: int
    nodes_created: int

    @property
    def length(self) -> int:
        """Number of timesteps of the crossing"""
        return len(self.actions)


def heuristic(y: int, config: GameConfig) -> int:
    """Lower bound on the timesteps needed to reach the top from `y`"""
    if y >= config.y_cross:
        return 0
    return -(-(config.y_cross - y) // config.step_max)


def _kind_of(result: StepResult) -> NodeKind:
    if result.collided:
        return NodeKind.COLLISION
    if result.crossed:
        return NodeKind.TERMINAL
    return NodeKind.OPEN


class CrossingSearch:
    """
    One A-Star solve. Owns its graph and frontier, so a search object must not be shared between threads.

    ```python
    search = CrossingSearch(seed=0, prefix=[Action.STAY] * 100, config=GameConfig())
    solution = search.run()
    ```
    """

    def __init__(
        self,
        seed: int,
        prefix: Sequence[Action],
        config: GameConfig,
        search: Optional[SearchConfig] = None,
        start_state: Optional[GameState] = None,
    ) -> None:
        self.seed = seed
        self.prefix = tuple(prefix)
        self.config = config
        self.search = search or SearchConfig()

        state = start_state if start_state is not None else replay(seed, self.prefix, config)
        if state.t >= game_length(seed, config):
            raise UsageError(f"the game with seed {seed} is already over at t={state.t}")
        if state.cooldown > 0:
            raise UsageError(f"cannot start a search with cooldown {state.cooldown}; burn it first")

        self.start_state = state
        self.graph = SearchGraph(NodeKey(state.t, state.y), state)
        self.frontier: List[FrontierEntry] = []
        self.popped_f: List[int] = []
        self.nodes_expanded = 0
        self._sequence = 0

    def estimate(self, y: int) -> int:
        """Heuristic used to order the frontier. Zero turns the search into uniform-cost search"""
        return heuristic(y, self.config) if self.search.use_heuristic else 0

    def canonical_state(self, record: NodeRecord) -> GameState:
        """State at `record`, from the cache or by replaying its canonical path from the start"""
        if record.cached_state is not None:
            return record.cached_state
        path = reconstruct_path(self.graph, record.key)
        return replay_from(self.start_state, path, self.config)

    def push(self, record: NodeRecord) -> None:
        """Adds a node to the frontier"""
        f = record.g + self.estimate(record.key.y)
        heapq.heappush(self.frontier, (f, -record.g, self._sequence, record.key))
        self._sequence += 1

    def _create_child(self, parent: NodeRecord, action: Action, state: GameState) -> Tuple[
        Optional[NodeRecord], Optional[GameState]
    ]:
        try:
            child_state, result = step(state, action, self.config)
        except GameOverError:
            return None, None

        key = NodeKey(result.t_after, result.new_y)
        cached = child_state if self.search.cache_states else None
        record = self.graph.create(key, parent, action, _kind_of(result), cached)
        if record is not None and record.kind is not NodeKind.COLLISION:
            self.push(record)
        return record, child_state

    def expand(self, node: NodeRecord) -> List[NodeRecord]:
        """
        Creates the children of `node` in the order up, stay, down and closes it. Children whose key already exists
        keep their original parent. A node at the last timestep of the game has no children.
        """
        state = self.canonical_state(node)
        children: List[NodeRecord] = []

        for action in EXPANSION_ORDER:
            record, child_state = self._create_child(node, action, state)
            if child_state is None:
                break
            if record is not None:
                children.append(record)

        node.kind = NodeKind.CLOSED
        logger.debug("expanded %s into %d children", node.key, len(children))
        return children

    def rollout_up(self, start: NodeRecord) -> List[NodeRecord]:
        """
        Extends a chain of UP actions from an open node until it hits a collision, a terminal node, a key that
        already exists or the end of the game.
        """
        created: List[NodeRecord] = []
        current = start
        state = self.canonical_state(start)

        while True:
            record, child_state = self._create_child(current, Action.UP, state)
            if record is None or child_state is None:
                break
            created.append(record)
            if record.kind is not NodeKind.OPEN:
                break
            current, state = record, child_state

        return created

    def run(self) -> CrossingSolution:
        """Searches until a terminal node is popped"""
        self.push(self.graph.start_record)

        while self.frontier:
            f, _, _, key = heapq.heappop(self.frontier)
            record = self.graph[key]
            self.popped_f.append(f)

            if record.kind is NodeKind.TERMINAL:
                solution = CrossingSolution(
                    start=self.graph.start,
                    terminal=key,
                    actions=tuple(reconstruct_path(self.graph, key)),
                    nodes_expanded=self.nodes_expanded,
                    nodes_created=len(self.graph),
                )
                logger.info(
                    "seed %d from %s: crossed in %d steps (%d expanded, %d created)",
                    self.seed,
                    solution.start,
                    solution.length,
                    solution.nodes_expanded,
                    solution.nodes_created,
                )
                return solution

            if record.kind is not NodeKind.OPEN:
                continue

            self.nodes_expanded += 1
            if self.search.max_expansions is not None and self.nodes_expanded > self.search.max_expansions:
                raise NoPathError(f"gave up after {self.search.max_expansions} expansions")

            children = self.expand(record)
            if self.search.rollout:
                up_child = next((c for c in children if c.action_from_parent is Action.UP), None)
                if up_child is not None and up_child.kind is NodeKind.OPEN:
                    self.rollout_up(up_child)

        logger.warning("seed %d from %s: no crossing before the game ends", self.seed, self.graph.start)
        raise NoPathError(f"no crossing from {self.graph.start} before the game with seed {self.seed} ends")


@log_duration
def solve_crossing(
    seed: int,
    prefix: Sequence[Action],
    config: GameConfig,
    search: Optional[SearchConfig] = None,
) -> CrossingSolution:
    """Fastest crossing after playing `prefix` in the game with `seed`. Raises NoPathError if none exists"""
    return CrossingSearch(seed, prefix, config, search).run()
