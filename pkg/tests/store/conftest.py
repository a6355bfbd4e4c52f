import os
from typing import Any, Generator

import pytest

from freeway_oracle.store import DATABASE_URL_ENV, ResultStore, open_store
from freeway_oracle.store.models import Base


@pytest.fixture
def store() -> Generator[ResultStore, Any, None]:
    database_url = os.environ.get(DATABASE_URL_ENV, "sqlite://")

    result_store = open_store(database_url)
    engine = result_store.session.get_bind()

    try:
        yield result_store
    finally:
        result_store.session.close()

    Base.metadata.drop_all(bind=engine)
