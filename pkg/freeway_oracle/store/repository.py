"""
Contains a generic base repository or DAO for access patterns to data for a given database model
"""

from typing import Any, Generic, Optional, Sequence, Type, TypeVar, cast

from sqlalchemy import ColumnElement, Select, select

from freeway_oracle.exceptions import RecordNotFoundError
from freeway_oracle.store.models import BaseModel, GameRecord, ScenarioRecord
from freeway_oracle.store.session import Session

T = TypeVar("T", bound=BaseModel)


class Repository(Generic[T]):
    """
    A base class for implementing a Repository or DAO.

    ```python
    scenarios = Repository(model=ScenarioRecord, session=session)

    record = scenarios.find("45a09352-4af5-4e46-a20e-29640cfd73dd")
    ```
    """

    def __init__(self, model: Type[T], session: Session) -> None:
        """Creates an instance of the Repository"""
        self.model = model
        self.session = session

    def create(self, refresh: bool = False, **kwargs: Any) -> T:
        """Creates a new entity

        Args:
            refresh (bool, optional): whether to refresh the model with the data in the return. Defaults to False.

        Returns:
            T: The created model instance
        """
        model_instance = self.model(**kwargs)
        self.session.add(model_instance)

        if refresh:
            self.session.flush()
            self.session.refresh(model_instance)

        return model_instance

    def query(self) -> Select:
        """Returns a select query over the model"""
        return select(self.model)

    def find(self, pk: Any) -> Optional[T]:
        """Retrieve a given model given its primary key"""
        pk_column = cast(ColumnElement, getattr(self.model, self.model.pk))

        statement = self.query().where(pk_column == pk).limit(1)

        return self.session.scalars(statement).first()

    def find_or_raise(self, pk: Any) -> T:
        """Finds the given entity or raises an exception if the entity can not be found"""
        entity = self.find(pk)

        if not entity:
            raise RecordNotFoundError(f"The model {self.model.__name__} {pk} does not exist")

        return entity

    def all(self) -> Sequence[T]:
        """Retrieves all records for the given model"""
        return self.session.scalars(self.query()).all()

    def list(self, limit: int = 20, offset: int = 0) -> Sequence[T]:
        """Returns a page of records, newest first"""
        statement = self.query().order_by(self.model.created_at.desc()).limit(limit).offset(offset)

        return self.session.scalars(statement).all()


class ScenarioRepository(Repository[ScenarioRecord]):
    """Scenario records, always scoped to one configuration digest"""

    def __init__(self, session: Session) -> None:
        super().__init__(model=ScenarioRecord, session=session)

    def for_config(self, config_digest: str) -> Sequence[ScenarioRecord]:
        """Every scenario solved under a configuration, ordered by (seed, start_t)"""
        statement = (
            self.query()
            .where(ScenarioRecord.config_digest == config_digest)
            .order_by(ScenarioRecord.seed, ScenarioRecord.start_t)
        )
        return self.session.scalars(statement).all()

    def find_by_spec(self, seed: int, start_t: int, config_digest: str) -> Optional[ScenarioRecord]:
        """The record of one scenario, if it was solved"""
        statement = self.query().where(
            ScenarioRecord.seed == seed,
            ScenarioRecord.start_t == start_t,
            ScenarioRecord.config_digest == config_digest,
        )
        return self.session.scalars(statement).first()


class GameRepository(Repository[GameRecord]):
    """Full-game records"""

    def __init__(self, session: Session) -> None:
        super().__init__(model=GameRecord, session=session)

    def find_by_seed(self, seed: int, config_digest: str) -> Optional[GameRecord]:
        """The stored game for a seed under a configuration"""
        statement = self.query().where(GameRecord.seed == seed, GameRecord.config_digest == config_digest)
        return self.session.scalars(statement).first()
