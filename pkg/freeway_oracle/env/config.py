"""
Configuration models for the simulator and the oracle
"""

from fractions import Fraction
from functools import cached_property
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

# bound on the denominator used when speeds are turned into exact rationals
SPEED_DENOMINATOR_LIMIT = 1000


class GameConfig(BaseModel):
    """
    Every numeric constant of the dynamics model.

    Several values (knockback, both cooldowns, the step distribution, jitter) are stand-ins chosen to match the
    observed behaviour rather than measured constants, so all of them can be overridden from a config file.

    `deterministic_mode` switches jitter off and fixes the step size at 3 which makes the (t, y) graph Markovian.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    x_range: int = 160
    y_min: int = 6
    y_cross: int = 175
    y_cap: int = 177

    lane_count: int = 10
    lane_base: int = 13
    lane_width_step: int = 16
    lane_height: int = 16

    speeds: Tuple[float, ...] = (0.6, 0.75, 1.0, 1.5, 3.0, 3.0, 1.5, 1.0, 0.75, 0.6)
    directions: Tuple[int, ...] = (1, 1, 1, 1, 1, -1, -1, -1, -1, -1)

    collide_x_lo: int = 40
    collide_x_hi: int = 53

    step_max: int = 4
    step_sizes: Tuple[int, ...] = (2, 3, 4)
    step_weights: Tuple[int, ...] = (1, 1, 2)
    deterministic_step: int = 3

    knockback: int = 24
    cool_hit: int = 12
    cool_top: int = 8

    jitter_amplitude: int = 4

    game_len_base: int = 2700
    game_len_spread: int = 100

    deterministic_mode: bool = False

    @model_validator(mode="after")
    def _check_invariants(self) -> "GameConfig":
        if not self.y_min < self.y_cross <= self.y_cap:
            raise ValueError("expected y_min < y_cross <= y_cap")
        if not 0 <= self.collide_x_lo <= self.collide_x_hi < self.x_range:
            raise ValueError("expected 0 <= collide_x_lo <= collide_x_hi < x_range")
        if len(self.speeds) != self.lane_count or len(self.directions) != self.lane_count:
            raise ValueError(f"speeds and directions need exactly {self.lane_count} entries")
        if any(d not in (1, -1) for d in self.directions):
            raise ValueError("directions must be +1 or -1")
        if any(s < 0 for s in self.speeds):
            raise ValueError("speeds must be non-negative")
        if len(self.step_sizes) != len(self.step_weights) or not self.step_sizes:
            raise ValueError("step_sizes and step_weights must be non-empty and of equal length")
        if any(s <= 0 for s in self.step_sizes) or any(w <= 0 for w in self.step_weights):
            raise ValueError("step sizes and weights must be positive")
        if max(self.step_sizes) != self.step_max:
            raise ValueError("the largest step size must equal step_max")
        if not 0 < self.deterministic_step <= self.step_max:
            raise ValueError("deterministic_step must lie in (0, step_max]")
        if self.jitter_amplitude < 1 or self.game_len_spread < 1:
            raise ValueError("jitter_amplitude and game_len_spread must be >= 1")
        if self.knockback < 0 or self.cool_hit < 0 or self.cool_top < 0:
            raise ValueError("knockback and cooldowns must be non-negative")
        return self

    @cached_property
    def speed_ratios(self) -> Tuple[Tuple[int, int], ...]:
        """Speeds as exact (numerator, denominator) pairs"""
        ratios = []
        for speed in self.speeds:
            fraction = Fraction(str(speed)).limit_denominator(SPEED_DENOMINATOR_LIMIT)
            ratios.append((fraction.numerator, fraction.denominator))
        return tuple(ratios)

    @cached_property
    def lane_bands(self) -> Tuple[Tuple[int, int], ...]:
        """Inclusive (lo, hi) Y band of every lane"""
        return tuple(
            (
                self.lane_width_step * lane + self.lane_base,
                self.lane_width_step * lane + self.lane_base + self.lane_height,
            )
            for lane in range(self.lane_count)
        )

    @cached_property
    def step_table(self) -> Tuple[int, ...]:
        """Step sizes repeated by weight, so one uniform draw over its length picks a step"""
        return tuple(size for size, weight in zip(self.step_sizes, self.step_weights) for _ in range(weight))

    @property
    def expected_step(self) -> float:
        """Mean of the step-size distribution"""
        return sum(self.step_table) / len(self.step_table)


class SearchConfig(BaseModel):
    """Knobs of the oracle search. None of them change the definition of a node's outgoing edges"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rollout: bool = True
    cache_states: bool = True
    use_heuristic: bool = True
    max_expansions: Optional[int] = Field(default=None, ge=1)


class OracleSettings(BaseModel):
    """Everything a command needs, loadable from a JSON config file"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    game: GameConfig = Field(default_factory=GameConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
