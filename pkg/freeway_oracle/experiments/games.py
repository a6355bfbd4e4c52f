"""
Full games: the oracle player that repeatedly solves the next crossing, and the always-up baseline
"""

import logging
from collections import Counter
from functools import partial
from typing import List, Optional, Sequence, Tuple

from freeway_oracle.env.actions import Action, decode_actions, encode_actions
from freeway_oracle.env.config import GameConfig, SearchConfig
from freeway_oracle.env.model import GameState, game_length, iter_steps, replay_from, reset, step
from freeway_oracle.exceptions import NoPathError
from freeway_oracle.experiments.pool import run_pool
from freeway_oracle.experiments.types import Crossing, GameTrace
from freeway_oracle.logger import log_duration
from freeway_oracle.oracle.astar import CrossingSearch
from freeway_oracle.protocols import Agent

logger = logging.getLogger(__name__)

# seeds 0-4 and every multiple of 50 up to 1000
DEFAULT_GAME_SEEDS: Tuple[int, ...] = (0, 1, 2, 3, 4) + tuple(range(50, 1001, 50))


class AlwaysUpAgent:
    """Presses UP on every timestep"""

    def act(self, state: GameState) -> Action:
        """Always UP"""
        return Action.UP


def build_trace(seed: int, actions: Sequence[Action], config: GameConfig) -> GameTrace:
    """
    Replays `actions` from a fresh game and records the Y series and crossings. A crossing starts at the first
    timestep with no cooldown after the previous crossing (or at t=0) and ends at the step that scores.
    """
    state = reset(seed, config)
    y_series = [state.y]
    crossings: List[Crossing] = []
    segment_start: Optional[int] = 0

    for state, result in iter_steps(state, actions, config):
        y_series.append(state.y)
        if result.crossed:
            # a crossing needs a move, so the previous state had no cooldown and the segment is open
            assert segment_start is not None
            crossings.append(Crossing(start_t=segment_start, length=state.t - segment_start))
            segment_start = None
        if segment_start is None and state.cooldown == 0:
            segment_start = state.t

    return GameTrace(
        seed=seed,
        actions=encode_actions(actions),
        score=state.score,
        crossings=crossings,
        y_series=y_series,
        config=config,
    )


def run_agent(seed: int, agent: Agent, config: GameConfig) -> GameTrace:
    """Plays a whole game, asking `agent` for every action"""
    state = reset(seed, config)
    actions: List[Action] = []
    end = game_length(seed, config)

    while state.t < end:
        action = agent.act(state)
        state, _ = step(state, action, config)
        actions.append(action)

    return build_trace(seed, actions, config)


def always_up_baseline(seed: int, config: GameConfig) -> int:
    """Score of pressing UP for the whole game"""
    return run_agent(seed, AlwaysUpAgent(), config).score


@log_duration
def play_full_game(seed: int, config: GameConfig, search: Optional[SearchConfig] = None) -> GameTrace:
    """
    Plays a whole game with the oracle: solve the fastest crossing from the current state, then press UP until the
    post-crossing cooldown is over, and repeat. When no further crossing fits before the end, UP is pressed until
    the game is over. Each search starts from the replay of everything played so far.
    """
    actions: List[Action] = []
    state = reset(seed, config)
    end = game_length(seed, config)

    while state.t < end:
        try:
            solution = CrossingSearch(seed, actions, config, search, start_state=state).run()
        except NoPathError:
            padding = [Action.UP] * (end - state.t)
            actions.extend(padding)
            state = replay_from(state, padding, config)
            break

        actions.extend(solution.actions)
        state = replay_from(state, solution.actions, config)
        logger.info("seed %d: crossing %d took %d steps (t=%d)", seed, state.score, solution.length, state.t)

        while state.cooldown > 0 and state.t < end:
            state, _ = step(state, Action.UP, config)
            actions.append(Action.UP)

    trace = build_trace(seed, actions, config)
    logger.info("seed %d: oracle scored %d", seed, trace.score)
    return trace


def replay_trace(trace: GameTrace) -> GameState:
    """Final state of a trace replayed from scratch"""
    return replay_from(reset(trace.seed, trace.config), decode_actions(trace.actions), trace.config)


def _baseline_row(seed: int, config: GameConfig) -> Tuple[int, int]:
    return seed, always_up_baseline(seed, config)


def baseline_scores(seeds: Sequence[int], config: GameConfig, workers: int = 1) -> List[Tuple[int, int]]:
    """(seed, always-up score) for every seed, in seed order"""
    return run_pool(partial(_baseline_row, config=config), sorted(seeds), workers)


def baseline_distribution(scores: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """(score, number of seeds) pairs ordered by score"""
    return sorted(Counter(score for _, score in scores).items())


def _play_row(seed: int, config: GameConfig, search: Optional[SearchConfig]) -> GameTrace:
    # log_duration wraps play_full_game in a proxy that cannot be pickled
    return play_full_game(seed, config, search)


def play_games(
    seeds: Sequence[int], config: GameConfig, search: Optional[SearchConfig] = None, workers: int = 1
) -> List[GameTrace]:
    """Oracle games for several seeds; each game is sequential, the seeds are spread over the pool"""
    return run_pool(partial(_play_row, config=config, search=search), list(seeds), workers)
