"""
Contains the database models of the results store
"""

from typing import Optional

from sqlalchemy import Text, UniqueConstraint
from sqlalchemy.orm import Mapped, mapped_column

from freeway_oracle.experiments.types import GameTrace, ScenarioResult, ScenarioSpec
from freeway_oracle.store.mixins import Base, TableNameMixin, TimestampColumnsMixin, UUIDPrimaryKeyMixin
from freeway_oracle.store.types import PydanticModel


# pylint: disable=too-many-ancestors
class BaseModel(UUIDPrimaryKeyMixin, TimestampColumnsMixin, TableNameMixin, Base):
    """
    Base model with a UUID primary key, timestamps and a pluralised snake-case table name
    """

    __abstract__ = True

    pk: str = "uuid"


class ScenarioRecord(BaseModel):
    """A solved (or unsolvable) scenario, tied to the dynamics it was solved under"""

    seed: Mapped[int]
    start_t: Mapped[int]
    length: Mapped[int]
    actions: Mapped[str] = mapped_column(Text)
    all_up: Mapped[bool]
    solvable: Mapped[bool]
    nodes_expanded: Mapped[int] = mapped_column(default=0)
    always_up_length: Mapped[Optional[int]]
    config_digest: Mapped[str] = mapped_column(index=True)

    __table_args__ = (UniqueConstraint("seed", "start_t", "config_digest"),)

    @classmethod
    def from_result(cls, result: ScenarioResult, config_digest: str) -> "ScenarioRecord":
        """Record for a scenario result"""
        return cls(
            seed=result.spec.seed,
            start_t=result.spec.start_t,
            length=result.length,
            actions=result.actions,
            all_up=result.all_up,
            solvable=result.solvable,
            nodes_expanded=result.nodes_expanded,
            always_up_length=result.always_up_length,
            config_digest=config_digest,
        )

    def to_result(self) -> ScenarioResult:
        """Scenario result held by the record"""
        return ScenarioResult(
            spec=ScenarioSpec(seed=self.seed, start_t=self.start_t),
            length=self.length,
            actions=self.actions,
            all_up=self.all_up,
            solvable=self.solvable,
            nodes_expanded=self.nodes_expanded,
            always_up_length=self.always_up_length,
        )


class GameRecord(BaseModel):
    """A full oracle game"""

    seed: Mapped[int]
    score: Mapped[int]
    config_digest: Mapped[str] = mapped_column(index=True)
    trace: Mapped[GameTrace] = mapped_column(PydanticModel(GameTrace))

    __table_args__ = (UniqueConstraint("seed", "config_digest"),)


__all__ = ["Base", "BaseModel", "GameRecord", "ScenarioRecord"]
