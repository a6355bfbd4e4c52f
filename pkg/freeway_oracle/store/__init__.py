"""
Results store entrypoint.

Scenario results and full games are persisted through SQLAlchemy so long batches can be resumed and queried.
Records are keyed by a digest of the GameConfig and SearchConfig they were computed under, so results from
different dynamics or different search settings never mix.
"""

import hashlib
import logging
from typing import Any, List, Optional, Sequence, Set, Tuple

import orjson
from sqlalchemy import Engine, create_engine, event
from sqlalchemy_utils import force_instant_defaults

from freeway_oracle.env.config import GameConfig, SearchConfig
from freeway_oracle.exceptions import RecordNotFoundError
from freeway_oracle.experiments.types import GameTrace, ScenarioResult
from freeway_oracle.store.models import Base, GameRecord, ScenarioRecord
from freeway_oracle.store.repository import GameRepository, Repository, ScenarioRepository
from freeway_oracle.store.session import Session, SessionLocal, transaction

logger = logging.getLogger(__name__)

# sets defaults for columns in the models on instantiation
force_instant_defaults()

DATABASE_URL_ENV = "FREEWAY_ORACLE_DATABASE_URL"


def config_digest(config: GameConfig, search: Optional[SearchConfig] = None) -> str:
    """
    Short stable digest of the canonical JSON of the game and search settings. `search` defaults to
    `SearchConfig()`; `cache_states` is left out since it never changes a solution
    """
    search = search or SearchConfig()
    payload = {
        "game": config.model_dump(mode="json"),
        "search": search.model_dump(mode="json", exclude={"cache_states"}),
    }
    canonical = orjson.dumps(payload, option=orjson.OPT_SORT_KEYS)
    return hashlib.sha256(canonical).hexdigest()[:16]


def _enable_sqlite_savepoints(engine: Engine) -> None:
    """pysqlite defers BEGIN on its own which breaks SAVEPOINT; hand transaction control to SQLAlchemy instead"""

    # pylint: disable=unused-argument
    @event.listens_for(engine, "connect")
    def _on_connect(dbapi_connection: Any, connection_record: Any) -> None:
        dbapi_connection.isolation_level = None

    @event.listens_for(engine, "begin")
    def _on_begin(connection: Any) -> None:
        connection.exec_driver_sql("BEGIN")


class ResultStore:
    """
    Facade over the scenario and game repositories.

    ```python
    store = open_store("sqlite:///runs.db")
    done = store.solved_specs(config)
    store.save_scenarios(results, config)
    ```
    """

    def __init__(self, session: Session) -> None:
        self.session = session
        self.scenarios = ScenarioRepository(session)
        self.games = GameRepository(session)

    @transaction
    def solved_specs(self, config: GameConfig, search: Optional[SearchConfig] = None) -> Set[Tuple[int, int]]:
        """(seed, start_t) of every scenario already stored for these settings"""
        return {(r.seed, r.start_t) for r in self.scenarios.for_config(config_digest(config, search))}

    @transaction
    def load_scenarios(self, config: GameConfig, search: Optional[SearchConfig] = None) -> List[ScenarioResult]:
        """Stored scenario results for these settings, ordered by spec"""
        return [record.to_result() for record in self.scenarios.for_config(config_digest(config, search))]

    @transaction
    def save_scenarios(
        self, results: Sequence[ScenarioResult], config: GameConfig, search: Optional[SearchConfig] = None
    ) -> int:
        """Stores results not yet present for these settings. Returns how many were added"""
        digest = config_digest(config, search)
        added = 0
        for result in results:
            if self.scenarios.find_by_spec(result.spec.seed, result.spec.start_t, digest) is None:
                self.session.add(ScenarioRecord.from_result(result, digest))
                added += 1
        logger.info("stored %d new scenario results", added)
        return added

    @transaction
    def save_game(self, trace: GameTrace, search: Optional[SearchConfig] = None) -> GameRecord:
        """Stores a game, replacing an earlier game for the same seed and configuration"""
        digest = config_digest(trace.config, search)
        record = self.games.find_by_seed(trace.seed, digest)
        if record is None:
            return self.games.create(seed=trace.seed, score=trace.score, config_digest=digest, trace=trace)

        record.score = trace.score
        record.trace = trace
        return record

    @transaction
    def load_game(self, seed: int, config: GameConfig, search: Optional[SearchConfig] = None) -> GameTrace:
        """The stored game for `seed`"""
        record = self.games.find_by_seed(seed, config_digest(config, search))
        if record is None:
            raise RecordNotFoundError(f"no game stored for seed {seed}")
        return record.trace

    def close(self) -> None:
        """Commits anything pending and releases the connection"""
        self.session.commit()
        self.session.close()


def open_store(url: str) -> ResultStore:
    """Connects to `url`, creates the schema if needed and returns a store bound to a fresh session"""
    engine = create_engine(url)
    if engine.dialect.name == "sqlite":
        _enable_sqlite_savepoints(engine)

    Base.metadata.create_all(bind=engine)
    SessionLocal.configure(bind=engine)

    return ResultStore(SessionLocal())


__all__ = [
    "DATABASE_URL_ENV",
    "GameRecord",
    "Repository",
    "ResultStore",
    "ScenarioRecord",
    "Session",
    "SessionLocal",
    "config_digest",
    "open_store",
    "transaction",
]
