"""
Experiment data models
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from freeway_oracle.env.config import GameConfig

MAX_SCENARIO_SEED = 999_999
MAX_SCENARIO_START_T = 2_500

ACTION_STRING_PATTERN = r"^[012]*$"


class ScenarioSpec(BaseModel):
    """A single-crossing scenario: the game seed and the timestep the crossing starts at"""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, le=MAX_SCENARIO_SEED)
    start_t: int = Field(ge=0, le=MAX_SCENARIO_START_T)

    @property
    def sort_key(self) -> Tuple[int, int]:
        """Ordering used for every dataset"""
        return self.seed, self.start_t


class ScenarioResult(BaseModel):
    """Fastest crossing for a scenario. Unsolvable scenarios are kept with `solvable` set to False"""

    model_config = ConfigDict(frozen=True)

    spec: ScenarioSpec
    length: int = Field(ge=0)
    actions: str = Field(pattern=ACTION_STRING_PATTERN)
    all_up: bool
    solvable: bool = True
    nodes_expanded: int = Field(default=0, ge=0)
    always_up_length: Optional[int] = None

    @model_validator(mode="after")
    def _check_consistency(self) -> "ScenarioResult":
        if self.solvable and self.length != len(self.actions):
            raise ValueError("length must equal the number of actions")
        if self.all_up != (self.solvable and bool(self.actions) and set(self.actions) == {"1"}):
            raise ValueError("all_up must be set exactly when the actions are all '1'")
        return self


class Crossing(BaseModel):
    """One scoring crossing within a game: the timestep it started at and how long it took"""

    model_config = ConfigDict(frozen=True)

    start_t: int = Field(ge=0)
    length: int = Field(ge=1)


class GameTrace(BaseModel):
    """A complete game: every action taken, the resulting Y series and the crossings that scored"""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0)
    actions: str = Field(pattern=ACTION_STRING_PATTERN)
    score: int = Field(ge=0)
    crossings: List[Crossing]
    y_series: List[int]
    config: GameConfig = Field(default_factory=GameConfig)

    @model_validator(mode="after")
    def _check_consistency(self) -> "GameTrace":
        if self.score != len(self.crossings):
            raise ValueError(f"score {self.score} does not match {len(self.crossings)} crossings")
        if len(self.y_series) != len(self.actions) + 1:
            raise ValueError("y_series must have one more entry than actions")
        return self


class DatasetSummary(BaseModel):
    """Aggregate statistics of a scenario dataset"""

    count: int
    solved: int
    unsolvable: int
    min_length: Optional[int] = None
    max_length: Optional[int] = None
    mean_length: Optional[float] = None
    all_up_fraction: Optional[float] = None
    mean_always_up_length: Optional[float] = None
