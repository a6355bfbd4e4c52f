"""
Experiment harnesses: the single-crossing scenario dataset, full oracle games and the always-up baseline
"""

from freeway_oracle.experiments.games import (
    DEFAULT_GAME_SEEDS,
    AlwaysUpAgent,
    always_up_baseline,
    baseline_distribution,
    baseline_scores,
    build_trace,
    play_full_game,
    play_games,
    replay_trace,
    run_agent,
)
from freeway_oracle.experiments.scenarios import (
    always_up_crossing_length,
    generate_dataset,
    length_histogram,
    sample_specs,
    scenario_prefix,
    solve_scenario,
    solve_scenarios,
    summarize_dataset,
)
from freeway_oracle.experiments.types import (
    Crossing,
    DatasetSummary,
    GameTrace,
    ScenarioResult,
    ScenarioSpec,
)

__all__ = [
    "DEFAULT_GAME_SEEDS",
    "AlwaysUpAgent",
    "Crossing",
    "DatasetSummary",
    "GameTrace",
    "ScenarioResult",
    "ScenarioSpec",
    "always_up_baseline",
    "always_up_crossing_length",
    "baseline_distribution",
    "baseline_scores",
    "build_trace",
    "generate_dataset",
    "length_histogram",
    "play_full_game",
    "play_games",
    "replay_trace",
    "run_agent",
    "sample_specs",
    "scenario_prefix",
    "solve_scenario",
    "solve_scenarios",
    "summarize_dataset",
]
