"""
Single-crossing scenarios: each is a seed plus a starting timestep reached by standing still, solved for the
fastest crossing.
"""

import logging
from collections import Counter
from functools import partial
from statistics import fmean
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from freeway_oracle.detrng import SAMPLE_TAG, draw_uniform, stream_init, stream_mix
from freeway_oracle.env.actions import Action, encode_actions, is_all_up
from freeway_oracle.env.config import GameConfig, SearchConfig
from freeway_oracle.env.model import game_length, replay, step
from freeway_oracle.exceptions import GameOverError, NoPathError, UsageError
from freeway_oracle.experiments.pool import run_pool
from freeway_oracle.experiments.types import (
    MAX_SCENARIO_SEED,
    MAX_SCENARIO_START_T,
    DatasetSummary,
    ScenarioResult,
    ScenarioSpec,
)
from freeway_oracle.logger import log_duration
from freeway_oracle.oracle.astar import heuristic, solve_crossing

logger = logging.getLogger(__name__)


def scenario_prefix(spec: ScenarioSpec) -> List[Action]:
    """Actions that bring the game to the scenario start"""
    return [Action.STAY] * spec.start_t


def always_up_crossing_length(seed: int, start_t: int, config: GameConfig) -> Optional[int]:
    """Timesteps an agent pressing UP every step needs to cross from `start_t`, or None if the game ends first"""
    state = replay(seed, [Action.STAY] * start_t, config)
    try:
        while True:
            state, result = step(state, Action.UP, config)
            if result.crossed:
                return state.t - start_t
    except GameOverError:
        return None


def solve_scenario(
    spec: ScenarioSpec, config: GameConfig, search: Optional[SearchConfig] = None
) -> ScenarioResult:
    """Solves one scenario. An impossible crossing yields a result flagged as unsolvable"""
    if spec.start_t >= game_length(spec.seed, config) - heuristic(config.y_min, config):
        raise UsageError(f"{spec} leaves no room to cross before the game ends")

    always_up = always_up_crossing_length(spec.seed, spec.start_t, config)

    try:
        solution = solve_crossing(spec.seed, scenario_prefix(spec), config, search)
    except NoPathError:
        logger.warning("scenario %s is unsolvable", spec)
        return ScenarioResult(
            spec=spec, length=0, actions="", all_up=False, solvable=False, always_up_length=always_up
        )

    return ScenarioResult(
        spec=spec,
        length=solution.length,
        actions=encode_actions(solution.actions),
        all_up=is_all_up(solution.actions),
        nodes_expanded=solution.nodes_expanded,
        always_up_length=always_up,
    )


def sample_specs(n: int, sampling_seed: int) -> List[ScenarioSpec]:
    """`n` distinct scenario specs drawn deterministically from `sampling_seed`, sorted by (seed, start_t)"""
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")

    seen: Set[Tuple[int, int]] = set()
    stream = stream_init(sampling_seed, SAMPLE_TAG)
    counter = 0

    while len(seen) < n:
        stream = stream_mix(stream, counter)
        seed = draw_uniform(stream, MAX_SCENARIO_SEED + 1)
        stream = stream_mix(stream, seed)
        start_t = draw_uniform(stream, MAX_SCENARIO_START_T + 1)
        seen.add((seed, start_t))
        counter += 1

    return [ScenarioSpec(seed=seed, start_t=start_t) for seed, start_t in sorted(seen)]


def _solve_row(spec: ScenarioSpec, config: GameConfig, search: Optional[SearchConfig]) -> ScenarioResult:
    try:
        return solve_scenario(spec, config, search)
    except UsageError as e:
        logger.warning("scenario %s is unsolvable: %s", spec, e)
        return ScenarioResult(spec=spec, length=0, actions="", all_up=False, solvable=False)


def solve_scenarios(
    specs: Sequence[ScenarioSpec],
    config: GameConfig,
    search: Optional[SearchConfig] = None,
    workers: int = 1,
) -> List[ScenarioResult]:
    """
    Solves every spec (in parallel when workers > 1). Results come back sorted by spec. Specs that start too late
    in the game to cross are kept as unsolvable rows instead of failing the batch
    """
    ordered = sorted(specs, key=lambda s: s.sort_key)
    return run_pool(partial(_solve_row, config=config, search=search), ordered, workers)


@log_duration
def generate_dataset(
    n: int,
    sampling_seed: int,
    config: GameConfig,
    search: Optional[SearchConfig] = None,
    workers: int = 1,
) -> List[ScenarioResult]:
    """Samples `n` scenarios and solves them"""
    results = solve_scenarios(sample_specs(n, sampling_seed), config, search, workers)
    logger.info("dataset of %d scenarios (%d unsolvable)", len(results), sum(not r.solvable for r in results))
    return results


def length_histogram(results: Iterable[ScenarioResult], bin_width: int) -> List[Tuple[int, int]]:
    """(bin_lo, count) for every non-empty bin of crossing lengths, ordered by bin"""
    if bin_width < 1:
        raise UsageError(f"bin_width must be >= 1, got {bin_width}")

    counts = Counter((r.length // bin_width) * bin_width for r in results)
    return sorted(counts.items())


def summarize_dataset(results: Sequence[ScenarioResult]) -> DatasetSummary:
    """Length statistics over the solved scenarios"""
    solved = [r for r in results if r.solvable]
    summary = DatasetSummary(count=len(results), solved=len(solved), unsolvable=len(results) - len(solved))
    if not solved:
        return summary

    lengths = [r.length for r in solved]
    always_up = [r.always_up_length for r in solved if r.always_up_length is not None]

    return summary.model_copy(
        update={
            "min_length": min(lengths),
            "max_length": max(lengths),
            "mean_length": fmean(lengths),
            "all_up_fraction": sum(r.all_up for r in solved) / len(solved),
            "mean_always_up_length": fmean(always_up) if always_up else None,
        }
    )
