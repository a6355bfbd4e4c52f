"""
Freeway simulator
"""

from freeway_oracle.env.actions import Action, decode_actions, encode_actions, is_all_up
from freeway_oracle.env.config import GameConfig, OracleSettings, SearchConfig
from freeway_oracle.env.model import (
    GameState,
    StepFlags,
    StepResult,
    car_x,
    collision_at,
    game_length,
    iter_steps,
    lane_band,
    lanes_at,
    replay,
    replay_from,
    reset,
    step,
)
from freeway_oracle.env.ram import encode_ram

__all__ = [
    "Action",
    "GameConfig",
    "GameState",
    "OracleSettings",
    "SearchConfig",
    "StepFlags",
    "StepResult",
    "car_x",
    "collision_at",
    "decode_actions",
    "encode_actions",
    "encode_ram",
    "game_length",
    "is_all_up",
    "iter_steps",
    "lane_band",
    "lanes_at",
    "replay",
    "replay_from",
    "reset",
    "step",
]
