"""
Deterministic Freeway dynamics.

Car positions are a pure function of (seed, lane, timestep). The chicken's step sizes come from a stream that
absorbs every action taken, so they depend on the seed and the whole action history rather than on (t, y).
"""

import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Iterator, Tuple, Union

from freeway_oracle.detrng import (
    CAR_TAG,
    CHICKEN_TAG,
    LEN_TAG,
    StreamState,
    draw_uniform,
    hash64,
    stream_init,
    stream_mix,
)
from freeway_oracle.env.actions import Action
from freeway_oracle.env.config import GameConfig
from freeway_oracle.exceptions import GameOverError, UsageError

logger = logging.getLogger(__name__)

ActionLike = Union[Action, int]


@dataclass(frozen=True, slots=True)
class StepFlags:
    """What happened during the most recent step"""

    collided: bool = False
    crossed: bool = False


@dataclass(frozen=True, slots=True)
class GameState:
    """Full simulator state. A value: stepping returns a new state"""

    seed: int
    t: int
    y: int
    cooldown: int
    score: int
    chicken_stream: StreamState
    last_step_flags: StepFlags = StepFlags()


@dataclass(frozen=True, slots=True)
class StepResult:
    """
    Outcome of one step.

    `new_y` is the Y reached by the move itself, before any knockback or top reset. The resulting GameState carries
    the Y after those effects.
    """

    new_y: int
    collided: bool
    crossed: bool
    t_after: int


@lru_cache(maxsize=1 << 18)
def _jitter(seed: int, lane: int, t: int, amplitude: int) -> int:
    return draw_uniform(StreamState(hash64((seed, CAR_TAG, lane, t))), amplitude)


@lru_cache(maxsize=1 << 14)
def _game_length(seed: int, base: int, spread: int) -> int:
    return base + hash64((seed, LEN_TAG)) % spread


def _check_lane(lane: int, config: GameConfig) -> None:
    if not 0 <= lane < config.lane_count:
        raise UsageError(f"lane must be in [0, {config.lane_count - 1}], got {lane}")


def car_x(seed: int, lane: int, t: int, config: GameConfig) -> int:
    """X position of the car in `lane` at timestep `t`. Independent of anything the player does"""
    _check_lane(lane, config)
    if t < 0:
        raise UsageError(f"timestep must be non-negative, got {t}")

    jitter = 0
    if t > 0 and not config.deterministic_mode:
        jitter = _jitter(seed, lane, t, config.jitter_amplitude)

    numerator, denominator = config.speed_ratios[lane]
    offset = ((numerator * t) // denominator + jitter) % config.x_range

    if config.directions[lane] > 0:
        return offset
    return (config.x_range - offset) % config.x_range


def lane_band(lane: int, config: GameConfig) -> Tuple[int, int]:
    """Inclusive Y band of a lane"""
    _check_lane(lane, config)
    return config.lane_bands[lane]


def lanes_at(y: int, config: GameConfig) -> Tuple[int, ...]:
    """Lanes whose band contains `y` (two on a shared boundary row, none on the start and top strips)"""
    return tuple(lane for lane, (lo, hi) in enumerate(config.lane_bands) if lo <= y <= hi)


def collision_at(seed: int, y: int, t: int, config: GameConfig) -> bool:
    """True if a chicken at `y` is hit at timestep `t`"""
    if not config.y_min <= y <= config.y_cap:
        raise UsageError(f"y must be in [{config.y_min}, {config.y_cap}], got {y}")

    for lane in lanes_at(y, config):
        if config.collide_x_lo <= car_x(seed, lane, t, config) <= config.collide_x_hi:
            return True
    return False


def game_length(seed: int, config: GameConfig) -> int:
    """Number of timesteps in the game played with `seed`"""
    return _game_length(seed, config.game_len_base, config.game_len_spread)


def draw_step(stream: StreamState, config: GameConfig) -> int:
    """Size of a move drawn from the chicken stream"""
    if config.deterministic_mode:
        return config.deterministic_step
    table = config.step_table
    return table[draw_uniform(stream, len(table))]


def reset(seed: int, config: GameConfig) -> GameState:
    """State at the start of a game"""
    return GameState(
        seed=seed,
        t=0,
        y=config.y_min,
        cooldown=0,
        score=0,
        chicken_stream=stream_init(seed, CHICKEN_TAG),
    )


def _as_action(action: ActionLike) -> Action:
    try:
        return Action(action)
    except ValueError as e:
        raise UsageError(f"invalid action {action!r}") from e


def step(state: GameState, action: ActionLike, config: GameConfig) -> Tuple[GameState, StepResult]:
    """Advances the game by one timestep"""
    if state.t >= game_length(state.seed, config):
        raise GameOverError(f"game with seed {state.seed} ended at t={state.t}")

    action = _as_action(action)
    stream = stream_mix(state.chicken_stream, int(action))
    y = state.y
    cooldown = state.cooldown

    if cooldown > 0:
        cooldown -= 1
    elif action is not Action.STAY:
        distance = draw_step(stream, config)
        y = y + distance if action is Action.UP else y - distance
        y = min(max(y, config.y_min), config.y_cap)

    new_y = y
    t = state.t + 1
    score = state.score
    collided = crossed = False

    if collision_at(state.seed, y, t, config):
        y = max(config.y_min, y - config.knockback)
        cooldown = config.cool_hit
        collided = True
    elif y >= config.y_cross:
        score += 1
        y = config.y_min
        cooldown = config.cool_top
        crossed = True

    next_state = replace(
        state,
        t=t,
        y=y,
        cooldown=cooldown,
        score=score,
        chicken_stream=stream,
        last_step_flags=StepFlags(collided=collided, crossed=crossed),
    )
    return next_state, StepResult(new_y=new_y, collided=collided, crossed=crossed, t_after=t)


def iter_steps(
    state: GameState, actions: Iterable[ActionLike], config: GameConfig
) -> Iterator[Tuple[GameState, StepResult]]:
    """Steps through `actions`, yielding every intermediate state with its result"""
    for action in actions:
        state, result = step(state, action, config)
        yield state, result


def replay_from(state: GameState, actions: Iterable[ActionLike], config: GameConfig) -> GameState:
    """Applies `actions` to `state` in order and returns the final state"""
    for state, _ in iter_steps(state, actions, config):
        pass
    return state


def replay(seed: int, actions: Iterable[ActionLike], config: GameConfig) -> GameState:
    """State reached by resetting the game with `seed` and playing `actions`"""
    return replay_from(reset(seed, config), actions, config)
